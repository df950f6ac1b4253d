#pragma once

#include <map>
#include <string>
#include <vector>

#include "nscas/enveloping.hpp"

namespace nscas {

// Verma module conventions follow the bracket sign convention used
// throughout: positive-index generators raise the L0 eigenvalue, so the
// cyclic vector |h> is annihilated by all E_k with k > 0 and level-l
// vectors have weight h - l.
struct VermaParams {
    Scalar h;        // L0 eigenvalue of |h>
    Scalar central;  // value of chat
    static VermaParams symbolic() {
        return {Scalar::variable(Var::h), Scalar::variable(Var::chat)};
    }
};

// Basis monomial: G_{-g1}...G_{-gk} L_{-l1}...L_{-lm} |h> with the g-parts
// strictly decreasing positive half-odd values and the l-parts a weakly
// decreasing partition of positive integers.
class PartitionMonomial {
public:
    PartitionMonomial() = default;
    PartitionMonomial(std::vector<HalfInt> g_parts, std::vector<std::int64_t> l_parts);

    const std::vector<HalfInt>& g_parts() const { return g_parts_; }
    const std::vector<std::int64_t>& l_parts() const { return l_parts_; }
    HalfInt level() const;
    // Letters of the canonical word, left to right.
    std::vector<Generator> letters() const;

    bool operator==(const PartitionMonomial& o) const = default;
    bool operator<(const PartitionMonomial& o) const;

    std::string str() const;  // e.g. "G[-3/2]*G[-1/2]*L[-1]^2 |h>"

private:
    std::vector<HalfInt> g_parts_;
    std::vector<std::int64_t> l_parts_;
};

class VermaVector {
public:
    VermaVector() = default;
    explicit VermaVector(const PartitionMonomial& m) { add(m, Scalar(1)); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<PartitionMonomial, Scalar>& terms() const { return terms_; }
    void add(const PartitionMonomial& m, const Scalar& c);

    VermaVector operator+(const VermaVector& o) const;
    VermaVector operator-(const VermaVector& o) const;
    VermaVector& operator+=(const VermaVector& o);
    bool operator==(const VermaVector& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::map<PartitionMonomial, Scalar> terms_;
};

VermaVector operator*(const Scalar& c, const VermaVector& v);

// All superpartition monomials of the given level, in canonical order.
std::vector<PartitionMonomial> basis(HalfInt level);
std::size_t dim(HalfInt level);

// Exact generator action via straightening.
VermaVector act(Generator g, const VermaVector& vec, const VermaParams& params);
VermaVector act(Generator g, const PartitionMonomial& m, const VermaParams& params);
VermaVector act_element(const Element& e, const VermaVector& vec, const VermaParams& params);

// Matrix of act(g) from basis(level) to basis(level - index(g)); entries
// indexed [row][col] = [target][source].
std::vector<std::vector<Scalar>> action_matrix(Generator g, HalfInt level,
                                               const VermaParams& params);

struct VermaReport {
    std::vector<std::string> failures;
    std::size_t pairs_checked = 0;
    std::size_t vectors_checked = 0;
    bool ok() const { return failures.empty(); }
};

// Verifies the super-commutator identity on all generator pairs with
// |index| <= index_bound against all basis vectors of level <= max_level.
VermaReport rep_check(const VermaParams& params, HalfInt max_level, HalfInt index_bound);

}  // namespace nscas
