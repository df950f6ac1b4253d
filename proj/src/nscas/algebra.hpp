#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nscas/halfint.hpp"
#include "nscas/scalar.hpp"

namespace nscas {

enum class Parity { even, odd };

// Basis element L_n (integer index) or G_r (half-odd index) of NS.
// The kind is determined by the index, so the index is the whole state.
// The central element c is *not* a Generator; it lives in Scalar as chat.
class Generator {
public:
    constexpr explicit Generator(HalfInt index) : index_(index) {}
    static Generator L(std::int64_t n) { return Generator(HalfInt::whole(n)); }
    static Generator G(std::int64_t doubled) { return Generator(HalfInt::halves(doubled)); }

    constexpr HalfInt index() const { return index_; }
    constexpr bool is_L() const { return index_.is_integer(); }
    constexpr bool is_G() const { return index_.is_half_odd(); }
    constexpr Parity parity() const { return is_L() ? Parity::even : Parity::odd; }
    constexpr bool odd() const { return is_G(); }
    constexpr HalfInt weight_degree() const { return index_; }

    constexpr auto operator<=>(const Generator&) const = default;

    std::string str() const {
        return std::string(is_L() ? "L[" : "G[") + index_.str() + "]";
    }

private:
    HalfInt index_;
};

// Unified accessor E_k.
inline Generator E(HalfInt k) { return Generator(k); }

// Super-bracket of two basis elements: a scalar multiple of one generator
// plus a chat multiple of the unit when the Kronecker delta fires.
struct Bracket {
    Scalar coeff;                    // coefficient of gen (0 if absent)
    std::optional<Generator> gen;    // absent when the generator part vanishes
    Scalar central;                  // coefficient of chat * unit
    bool is_zero() const { return coeff.is_zero() && central.is_zero(); }
};

Bracket bracket(Generator a, Generator b);

// Sign (-1)^{|a||b|} governing the super-swap of a and b.
inline int swap_sign(Generator a, Generator b) {
    return (a.odd() && b.odd()) ? -1 : 1;
}

struct ClosureResult {
    std::set<Generator> generators;
    bool central_reached = false;
};

// Breadth-first closure of the seed set under the bracket, truncated to
// |index| <= index_bound. central_reached is set once two closure brackets
// sharing a generator part differ in their chat coefficient.
ClosureResult adjoint_closure(const std::set<Generator>& seeds, HalfInt index_bound);

}  // namespace nscas
