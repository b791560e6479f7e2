#pragma once

// Symbolic rho-calculus over knot expression trees.  Values are a certified
// numeric part (the signature-integral contribution) plus an integer
// combination of opaque symbolic atoms:
//
//   rho1(K)            the rho^1 invariant of a leaf, from the rule
//                      "localize at the leaf's own Alexander polynomial"
//   rho0(R)            the signature integral of an abstract leaf with no
//                      Seifert data (known to exist, not computed here)
//   rhoTilde(R; p=..)  an abstract leaf's localized invariant when neither
//                      reduction rule applies
//
// Evaluation never fabricates a number: a concrete leaf outside both
// reduction rules poisons the computation with an Indeterminate error that
// names the offending subtree.

#include <concord/blanchfield.hpp>
#include <concord/facts.hpp>
#include <concord/seifert.hpp>

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace concord {

struct AbstractKnot {
    std::string name;
    LaurentPoly alexander;
    TorsionModule module;
    BlanchfieldForm form;
    std::vector<DeclaredFact> declared_facts;
};

struct KnotExpr;
using KnotExprPtr = std::shared_ptr<const KnotExpr>;

struct ConnectedSum {
    std::vector<KnotExprPtr> summands;
};

struct InfectionNode {
    KnotExprPtr base;  // leaf or abstract knot only
    ModuleElement eta;
    KnotExprPtr infecting;
};

struct KnotExpr {
    std::variant<KnotLeaf, AbstractKnot, ConnectedSum, InfectionNode> node;
};

KnotExprPtr make_leaf(KnotLeaf leaf);
KnotExprPtr make_abstract(AbstractKnot knot);
KnotExprPtr make_sum(std::vector<KnotExprPtr> summands);
KnotExprPtr make_infection(KnotExprPtr base, ModuleElement eta, KnotExprPtr infecting);

// The Fig.-style atlas base knot: slice, with cyclic Alexander module
// Q[t^{±1}]/(delta^2) for delta = t^2 - 3t + 1 generated by the unknotted
// curve eta.
AbstractKnot figure1_R();

struct IndeterminateError : Error {
    IndeterminateError(const std::string& what, std::string path_in)
        : Error(what + " [at " + path_in + "]"), path(std::move(path_in)) {}
    std::string path;
};

struct RhoValue {
    bool exact_zero = true;  // numeric part identically zero
    Rational lo, hi;         // certified interval for the numeric part
    std::map<std::string, long> atoms;

    bool is_exactly_zero() const { return exact_zero && atoms.empty(); }
};

RhoValue rho_zero_value();
RhoValue rho_atom(const std::string& name);
RhoValue rho_numeric(const RhoZero& r);
RhoValue sum_rho(const std::vector<RhoValue>& values);
RhoValue scale_rho(const RhoValue& v, long a);
std::string to_string(const RhoValue& v);

std::string rho1_atom_name(const std::string& leaf);
std::string rho0_atom_name(const std::string& leaf);
std::string rho_tilde_atom_name(const std::string& leaf, const LaurentPoly& p);

RhoValue leaf_rho(const LaurentPoly& p, const KnotLeaf& leaf, long bound);
RhoValue leaf_rho(const LaurentPoly& p, const AbstractKnot& leaf, long bound);
RhoValue infection_rho(const LaurentPoly& p, const KnotExprPtr& base, const ModuleElement& eta,
                       const KnotExprPtr& infecting, long bound);
RhoValue evaluate_rho(const LaurentPoly& p, const KnotExprPtr& expr, long bound);

// module of the knot an infection is performed on
TorsionModule base_module(const KnotExpr& base);

}  // namespace concord
