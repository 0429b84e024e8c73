#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace boardmagic {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Design violated its dimension or bijection invariants.
struct InvalidDesign : Error {
    using Error::Error;
};

/// An operation that requires a magic design was given something else.
struct NotMagic : Error {
    using Error::Error;
};

/// Magic square / magic rectangle construction errors.
struct BlockError : Error {
    enum class Kind {
        no_such_square,       // order 2
        no_such_rectangle,    // (2,2)
        parity_mismatch,      // h != k (mod 2)
        bad_dimensions,       // single row or column with the other side > 1
        pattern_unreachable,  // pinning target entry absent (internal bug)
    };
    BlockError(Kind k, const std::string& what) : Error(what), kind(k) {}
    Kind kind;
};

/// A board/class combination a constructor cannot build.
struct ConstructError : Error {
    enum class Kind {
        proven_impossible,  // a nonexistence result applies
        not_covered,        // outside the catalog of known constructions
    };
    ConstructError(Kind k, std::string rule_id, std::string statement)
        : Error(statement), kind(k), rule(std::move(rule_id)), statement(std::move(statement)) {}
    Kind kind;
    std::string rule;       // stable identifier of the rule or open family
    std::string statement;  // human-readable one-liner
};

/// Board exceeds the search budget's square cap.
struct BoardTooLarge : Error {
    using Error::Error;
};

/// Design document could not be parsed at all (malformed text).
struct DocumentParseError : Error {
    using Error::Error;
};

}  // namespace boardmagic
