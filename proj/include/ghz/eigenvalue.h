#pragma once

#include <string>

namespace ghz {

/// Outcome of asking whether a state is an eigenstate of a +-1-valued observable.
enum class Eigenvalue : int { Minus = -1, NotEigenstate = 0, Plus = 1 };

constexpr Eigenvalue eigenvalue_from_sign(int sign) { return sign > 0 ? Eigenvalue::Plus : Eigenvalue::Minus; }
constexpr int to_int(Eigenvalue e) { return static_cast<int>(e); }

inline std::string to_string(Eigenvalue e) {
    switch (e) {
        case Eigenvalue::Plus:
            return "+1";
        case Eigenvalue::Minus:
            return "-1";
        case Eigenvalue::NotEigenstate:
            break;
    }
    return "not-eigenstate";
}

}  // namespace ghz
