#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "boardmagic/board.hpp"

namespace boardmagic {

/// True iff p+q+r divides T(T+1), T = pq+pr+qr. A necessary condition for a
/// magic design; failure proves nonexistence.
bool magic_divisibility_ok(const Board& b);

/// The forced magic constant T(T+1)/(p+q+r) when integral, nullopt otherwise.
std::optional<std::int64_t> magic_constant(const Board& b);

enum class Verdict { ProvenYes, ProvenNo, Open };

/// What the implemented catalog of results says about (board, class).
/// ProvenYes/ProvenNo always carry the deciding rule; Open never does.
struct KnownStatus {
    Verdict verdict = Verdict::Open;
    std::string rule;
    std::string statement;
};

KnownStatus known_status(const Board& b, MagicClass cls);

const char* to_string(Verdict v);

}  // namespace boardmagic
