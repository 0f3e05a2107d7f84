#pragma once

#include <cstdint>
#include <string>

#include "rqct/errors.hpp"

namespace rqct {

// The two agreed orthogonal states, mapped to the classical bits 0 and 1.
enum class StateLabel : std::uint8_t { S1 = 0, S2 = 1 };

inline int label_bit(StateLabel l) noexcept { return l == StateLabel::S1 ? 0 : 1; }

inline StateLabel label_from_bit(int bit) {
    if (bit != 0 && bit != 1) throw InvalidInputError("label_from_bit: bit must be 0 or 1");
    return bit == 0 ? StateLabel::S1 : StateLabel::S2;
}

inline const char* to_string(StateLabel l) noexcept { return l == StateLabel::S1 ? "S1" : "S2"; }

enum class PartyId : std::uint8_t { A = 0, B = 1 };

inline PartyId other_party(PartyId p) noexcept { return p == PartyId::A ? PartyId::B : PartyId::A; }

inline const char* to_string(PartyId p) noexcept { return p == PartyId::A ? "A" : "B"; }

}  // namespace rqct
