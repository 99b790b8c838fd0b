#pragma once

#include "gtable/exactla.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gtable {
GTABLE_ERROR(NotACocycle);
GTABLE_ERROR(InvalidContext);
}  // namespace gtable

namespace gtable::cochain {

using la::Matrix;
using la::Scalar;
using la::Vector;

inline constexpr int kMaxDim = 16;

// phi_I (x) v_J with I, J stored as bit sets over the basis indices.
struct Monomial {
    std::uint32_t duals = 0;
    std::uint32_t primals = 0;

    int p() const;
    int q() const;
    std::vector<int> dual_indices() const;
    std::vector<int> primal_indices() const;
    bool operator==(const Monomial&) const = default;
    // Bidegree first, then lexicographic on the index lists.
    std::strong_ordering operator<=>(const Monomial& o) const;
};

class BigradedElement {
public:
    using Terms = std::map<Monomial, Scalar>;

    BigradedElement() = default;
    static BigradedElement one();
    // Canonicalizes unsorted index lists; a repeated index gives zero.
    static BigradedElement monomial(const std::vector<int>& duals, const std::vector<int>& primals,
                                    const Scalar& c = 1);
    static BigradedElement from_monomial(const Monomial& m, const Scalar& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);

    BigradedElement homogeneous(int p, int q) const;
    // Bidegree of a homogeneous nonzero element.
    std::optional<std::pair<int, int>> bidegree() const;

    BigradedElement& operator+=(const BigradedElement& o);
    BigradedElement& operator-=(const BigradedElement& o);
    friend BigradedElement operator+(BigradedElement a, const BigradedElement& b) { return a += b; }
    friend BigradedElement operator-(BigradedElement a, const BigradedElement& b) { return a -= b; }
    friend BigradedElement operator*(const Scalar& s, const BigradedElement& a);
    BigradedElement operator-() const;
    bool operator==(const BigradedElement&) const = default;

private:
    Terms terms_;
};

BigradedElement vee(const BigradedElement& a, const BigradedElement& b);
BigradedElement bracket(const BigradedElement& a, const BigradedElement& b);

// A degree-one generator: a dual basis vector (bidegree (1,0)) or a primal one ((0,1)).
struct Generator {
    bool dual;
    int index;
};

// Generators in the order whose product reproduces the monomial with coefficient +1.
std::vector<Generator> factors(const Monomial& m);
BigradedElement product(const std::vector<Generator>& gens);
// {g_1 v ... v g_k, c}, peeling g_1 first.
BigradedElement bracket_peeled(const std::vector<Generator>& gens, const BigradedElement& c);

struct ComplexContext {
    int n = 0;
    std::vector<std::string> primal_names;
    std::vector<std::string> dual_names;
    BigradedElement mu;
    // E, H, F acting on g (columns are images of basis vectors).
    std::optional<std::array<Matrix, 3>> sl2;

    // mu = sum_{i<j} xi_i xi_j (x) [e_i, e_j]; structure(i, j) gives [e_i, e_j] in coordinates.
    static ComplexContext from_lie_bracket(int n, const std::vector<std::vector<Vector>>& structure,
                                           std::vector<std::string> primal_names = {},
                                           std::vector<std::string> dual_names = {});
    // Throws InvalidContext unless mu has bidegree (2,1) and {mu, mu} = 0.
    void validate() const;
};

BigradedElement differential(const BigradedElement& c, const ComplexContext& ctx);
// X is 0, 1, 2 for E, H, F.
BigradedElement sl2_act(int X, const BigradedElement& c, const ComplexContext& ctx);

std::vector<Monomial> basis(int n, int p, int q);
Vector to_vector(const BigradedElement& c, int n, int p, int q);
BigradedElement from_vector(const Vector& v, int n, int p, int q);
// Matrix of d : C^{p,q} -> C^{p+1,q}.
Matrix differential_matrix(const ComplexContext& ctx, int p, int q);

struct Cohomology {
    int p = 0, q = 0;
    std::vector<BigradedElement> reps;
    la::Subspace boundaries;
    la::Subspace cocycles;
    std::size_t dim() const { return reps.size(); }
};

Cohomology cohomology(const ComplexContext& ctx, int p, int q);
// Uses the given representatives; throws InvalidContext unless they are cocycles forming a
// basis modulo boundaries.
Cohomology cohomology_with(const ComplexContext& ctx, int p, int q,
                           const std::vector<BigradedElement>& reps);

Vector class_coords(const BigradedElement& z, const Cohomology& h, const ComplexContext& ctx);

std::string render(const BigradedElement& c, const ComplexContext* ctx = nullptr);
std::string to_json(const BigradedElement& c);

}  // namespace gtable::cochain
