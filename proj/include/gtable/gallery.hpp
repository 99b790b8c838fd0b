#pragma once

#include "gtable/gtable.hpp"
#include "gtable/spec_file.hpp"
#include "gtable/supercochain.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gtable {
GTABLE_ERROR(FixtureMismatch);
GTABLE_ERROR(SizeMismatch);
GTABLE_ERROR(NotFound);
}  // namespace gtable

namespace gtable::gallery {

using cochain::BigradedElement;

// Table entries as literals: (row id, column id, [(target id, q, coefficient)]).
struct CellLiteral {
    std::string r1, r2;
    std::vector<std::tuple<std::string, int, Scalar>> terms;
};
GTable table_from_literals(const rep::Registry& reg, const std::vector<SummandInfo>& summands,
                           const std::vector<CellLiteral>& cells);

// Cells where the two tables differ, rendered as "row x col: expected ..., computed ...".
std::vector<std::string> table_differences(const GTable& computed, const GTable& expected);
// Throws FixtureMismatch naming the first differing cell.
void require_match(const std::string& what, const GTable& computed, const GTable& expected);

struct FixtureReport {
    std::string name;
    GTable computed;
    GTable expected;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// ---------------------------------------------------------------- Heisenberg

cochain::ComplexContext heisenberg_context();
rep::GModule heisenberg_module();        // h with its SL2 action
rep::Bilinear heisenberg_lie_bracket();  // [x_1, x_{-1}] = h_0
rep::Decomposition heisenberg_decomposition(const rep::Registry& reg);
GTable heisenberg_lie_table();
GTable heisenberg_lie_fixture();

struct RepresentativeRow {
    std::string id;
    int p, q, weight;
    BigradedElement rep;
};
const std::vector<RepresentativeRow>& representatives();

struct RepresentativeCheck {
    std::string id;
    bool cocycle = false, non_exact = false, e_annihilated = false, weight_ok = false;
    bool ok() const { return cocycle && non_exact && e_annihilated && weight_ok; }
};

// The even cohomology as an SL2-module with both products, in the basis F^j . rep.
struct HeisenbergAlgebra {
    cochain::ComplexContext ctx;
    std::map<std::pair<int, int>, cochain::Cohomology> cohomology;
    std::vector<BigradedElement> basis;
    std::vector<std::pair<int, int>> basis_bidegree;
    rep::GModule module;
    rep::Decomposition dec;
    rep::Bilinear cup, bracket;

    Vector coords(const BigradedElement& cocycle) const;
};

struct HeisenbergReport {
    std::map<std::pair<int, int>, std::size_t> dims;
    std::vector<RepresentativeCheck> checks;
    std::size_t total_dim = 0;
    GTable cup, bracket;
    HeisenbergAlgebra algebra;
};

// The eight bidegrees carrying even cohomology, in the summand order.
const std::vector<std::pair<int, int>>& even_bidegrees();
HeisenbergAlgebra heisenberg_algebra();
std::vector<RepresentativeCheck> check_representatives(const cochain::ComplexContext& ctx);
// Computes everything and compares both tables with the reference fixtures.
HeisenbergReport heisenberg_pipeline();
HeisenbergReport heisenberg_compute();
GTable cup_fixture();
GTable bracket_fixture();
// The even cohomology with its bracket as a spec file, summands given by highest weight vectors.
AlgebraSpec heisenberg_bracket_spec();

// ---------------------------------------------------------------- gl(n) x| gl(n)_ab

struct GlnGlnAb {
    int n = 0;
    Scalar a0;
    Matrix A0;
    Scalar a1;
    Matrix A1;

    static GlnGlnAb from_matrices(const Matrix& m0, const Matrix& m1);
    Matrix first() const;   // a0 I + A0
    Matrix second() const;  // a1 I + A1
    bool operator==(const GlnGlnAb&) const = default;
};

GlnGlnAb gln_product(const GlnGlnAb& u, const GlnGlnAb& v);
GlnGlnAb gln_bracket(const GlnGlnAb& u, const GlnGlnAb& v);

// Coordinates: entries of the first matrix row-major, then of the second.
Vector gln_coords(const GlnGlnAb& u);
GlnGlnAb gln_from_coords(int n, const Vector& v);
rep::Bilinear gln_product_bilinear(int n);
rep::Bilinear gln_bracket_bilinear(int n);
rep::GModule gln_module(int n);  // GL(n) acting by conjugation on both factors
rep::Decomposition gln_decomposition(int n, const rep::Registry& reg);

struct GlnTables {
    GTable product, bracket;
};
GlnTables gln_tables(int n);
GlnTables gln_fixture(int n);

struct AxiomReport {
    std::size_t pairs = 0, triples = 0;
    bool commutative = true, associative = true, antisymmetric = true, jacobi = true, leibniz = true;
    bool ok() const { return commutative && associative && antisymmetric && jacobi && leibniz; }
};
// Full basis enumeration for a commutative product and a Lie bracket on the same space.
AxiomReport poisson_axioms(const rep::Bilinear& product, const rep::Bilinear& bracket);
AxiomReport gln_axioms(int n);

// gl(3) x| gl(3)_ab under the SL2 in the upper left corner, decomposed along the
// ten summands matching the even Heisenberg cohomology.
rep::GModule gl3_sl2_module();
rep::Decomposition gl3_sl2_decomposition(const rep::Registry& reg);
GlnTables gl3_sl2_tables();

struct IsomorphismSearch {
    GMatrix f;
    std::size_t matchings_tried = 0;
    std::size_t assignments_tried = 0;
};

// f from the Heisenberg tables (source) to the gl(3) tables (target) preserving both
// products. Throws NotFound.
IsomorphismSearch find_isomorphism(const GTable& cup, const GTable& bracket, const GTable& product,
                                   const GTable& lie);
IsomorphismSearch find_isomorphism();
GMatrix archived_isomorphism();

// ---------------------------------------------------------------- worked examples

rep::GModule s3_group_algebra_module();  // K[S3] under conjugation
rep::Bilinear s3_group_algebra_product();
Matrix s3_coproduct();                    // Delta(g) = g (x) g
rep::Decomposition s3_decomposition(const rep::Registry& reg);
FixtureReport s3_table_report();
FixtureReport s3_cotable_report();
// K[S3] as a coalgebra only, summands given by their embeddings into the dual.
AlgebraSpec s3_coalgebra_spec();

rep::GModule matrix_algebra_module(int k);
rep::Bilinear matrix_algebra_product(int k);
rep::Decomposition matrix_algebra_decomposition(int k, const rep::Registry& reg);
FixtureReport mk_report(int k);

rep::GModule sl3_module();
rep::Bilinear sl3_bracket();
rep::Decomposition sl3_decomposition(const rep::Registry& reg);
FixtureReport sl3_report();

rep::GModule poly_module(int max_degree);
rep::Bilinear poly_product(int max_degree);
rep::Decomposition poly_decomposition(int max_degree, const rep::Registry& reg);
FixtureReport poly_report(int max_degree);

// Throwing variants: FixtureMismatch on the first differing cell.
GTable s3_fixture();
GTable s3_cotable_fixture();
GTable mk_fixture(int k);
GTable sl3_fixture();
GTable poly_fixture(int max_degree);

}  // namespace gtable::gallery
