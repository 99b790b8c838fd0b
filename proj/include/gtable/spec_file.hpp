#pragma once

#include "gtable/gtable.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gtable {

// Explicit summand of a spec file: either a highest weight vector (SL2) or a full
// equivariant embedding tau of the model.
struct SpecSummand {
    std::string id;
    std::optional<Vector> hwv;
    std::optional<rep::IrrepId> irrep;
    std::optional<Matrix> tau;
};

// A G-algebra or G-coalgebra given by its action and structure constants.
//
//   {"group": "SL2", "labeling": "sl2-first", "dim": 3,
//    "basis": ["x_1", "x_{-1}", "h_0"],
//    "action": [[["0","1","0"], ...], ...],
//    "product": [{"i": 0, "j": 1, "k": 2, "c": "1"}, ...],
//    "comultiplication": [{"k": 0, "i": 0, "j": 0, "c": "1"}, ...],
//    "summands": [{"id": "h_0", "hwv": ["0","0","1"]}, ...]}
//
// "product" lists e_i e_j = sum c e_k; "comultiplication" lists the coefficient c of
// e_i (x) e_j in Delta(e_k). At least one of them must be present.
struct AlgebraSpec {
    rep::Group group;
    std::string labeling;
    rep::GModule module;
    std::optional<rep::Bilinear> product;
    std::optional<Matrix> coproduct;  // (dim*dim) x dim
    std::vector<SpecSummand> summands;
};

// Throws ParseError on malformed input and InvalidModule when the action fails the relations.
AlgebraSpec parse_spec(std::string_view json_text);
AlgebraSpec load_spec(const std::string& path);
std::string spec_to_json(const AlgebraSpec& spec);

rep::Registry labeling_by_name(const rep::Group& group, const std::string& name);

// Decomposes the module (or its dual, for a coalgebra) and extracts the table.
GTable extract_from_spec(const AlgebraSpec& spec);
GTable cotable_from_spec(const AlgebraSpec& spec);

// The contragredient module: -X^T for derivations, g^{-1} transposed for group elements.
rep::GModule dual_module(const rep::GModule& m);

std::string decomposition_to_json(const rep::Decomposition& dec);

}  // namespace gtable
