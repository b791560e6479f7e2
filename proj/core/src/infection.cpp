#include <concord/infection.hpp>

#include <concord/factor.hpp>
#include <concord/poly_io.hpp>

namespace concord {

namespace {

RhoValue evaluate_rho_at(const LaurentPoly& p, const KnotExprPtr& expr, long bound,
                         const std::string& path);

// rho^0 of a concrete expression: additive over connected sums, and only
// available where Seifert data exists
RhoValue rho0_of_expr(const KnotExprPtr& expr, const std::string& path) {
    if (!expr) throw Error("null expression");
    if (const auto* leaf = std::get_if<KnotLeaf>(&expr->node)) return rho_numeric(rho0(leaf->seifert));
    if (const auto* sum = std::get_if<ConnectedSum>(&expr->node)) {
        std::vector<RhoValue> parts;
        parts.reserve(sum->summands.size());
        for (size_t i = 0; i < sum->summands.size(); ++i)
            parts.push_back(rho0_of_expr(sum->summands[i], path + "/sum[" + std::to_string(i) + "]"));
        return sum_rho(parts);
    }
    throw IndeterminateError("missing Seifert data for rho^0 of infecting knot", path);
}

RhoValue leaf_rho_at(const LaurentPoly& p, const KnotLeaf& leaf, long bound,
                     const std::string& path) {
    LaurentPoly delta = alexander_poly(leaf.seifert);
    if (delta.span() == 0) return rho_numeric(rho0(leaf.seifert));  // trivial Alexander module
    if (associates(squarefree_part(p), squarefree_part(delta)))
        return rho_atom(rho1_atom_name(leaf.name));
    if (strongly_coprime(p, delta, bound).status == CoprimalityStatus::StronglyCoprime)
        return rho_numeric(rho0(leaf.seifert));
    throw IndeterminateError(
        "leaf '" + leaf.name + "': p neither shares Delta's roots nor is certified strongly coprime",
        path);
}

RhoValue leaf_rho_at(const LaurentPoly& p, const AbstractKnot& leaf, long bound,
                     const std::string& path) {
    (void)path;
    const LaurentPoly& delta = leaf.alexander;
    if (delta.is_zero() || delta.canonical().span() == 0) return rho_zero_value();
    if (associates(squarefree_part(p), squarefree_part(delta)))
        return rho_atom(rho1_atom_name(leaf.name));
    if (strongly_coprime(p, delta, bound).status == CoprimalityStatus::StronglyCoprime)
        return rho_atom(rho0_atom_name(leaf.name));
    return rho_atom(rho_tilde_atom_name(leaf.name, p));
}

RhoValue infection_rho_at(const LaurentPoly& p, const KnotExprPtr& base, const ModuleElement& eta,
                          const KnotExprPtr& infecting, long bound, const std::string& path) {
    if (!base || !infecting) throw Error("null expression");
    TorsionModule mod = base_module(*base);
    ModuleElement eta_reduced = reduce_element(mod, eta.coords);
    LocalizedMembership membership = element_in_localization(mod, p, eta_reduced, bound);
    if (membership.conservative)
        throw IndeterminateError("localization of the base module is conservative at this bound",
                                 path);
    RhoValue base_value = evaluate_rho_at(p, base, bound, path + "/base");
    if (!membership.nonzero) return base_value;
    RhoValue inf0 = rho0_of_expr(infecting, path + "/infecting");
    return sum_rho({base_value, inf0});
}

RhoValue evaluate_rho_at(const LaurentPoly& p, const KnotExprPtr& expr, long bound,
                         const std::string& path) {
    if (!expr) throw Error("null expression");
    if (const auto* leaf = std::get_if<KnotLeaf>(&expr->node))
        return leaf_rho_at(p, *leaf, bound, path);
    if (const auto* ab = std::get_if<AbstractKnot>(&expr->node))
        return leaf_rho_at(p, *ab, bound, path);
    if (const auto* sum = std::get_if<ConnectedSum>(&expr->node)) {
        std::vector<RhoValue> parts;
        parts.reserve(sum->summands.size());
        for (size_t i = 0; i < sum->summands.size(); ++i)
            parts.push_back(
                evaluate_rho_at(p, sum->summands[i], bound, path + "/sum[" + std::to_string(i) + "]"));
        return sum_rho(parts);
    }
    const auto& inf = std::get<InfectionNode>(expr->node);
    return infection_rho_at(p, inf.base, inf.eta, inf.infecting, bound, path + "/infection");
}

}  // namespace

KnotExprPtr make_leaf(KnotLeaf leaf) {
    return std::make_shared<const KnotExpr>(KnotExpr{std::move(leaf)});
}

KnotExprPtr make_abstract(AbstractKnot knot) {
    return std::make_shared<const KnotExpr>(KnotExpr{std::move(knot)});
}

KnotExprPtr make_sum(std::vector<KnotExprPtr> summands) {
    for (const auto& s : summands)
        if (!s) throw Error("null expression");
    return std::make_shared<const KnotExpr>(KnotExpr{ConnectedSum{std::move(summands)}});
}

KnotExprPtr make_infection(KnotExprPtr base, ModuleElement eta, KnotExprPtr infecting) {
    if (!base || !infecting) throw Error("null expression");
    if (!std::holds_alternative<KnotLeaf>(base->node) &&
        !std::holds_alternative<AbstractKnot>(base->node))
        throw Error("infection base must be a leaf or abstract knot");
    return std::make_shared<const KnotExpr>(
        KnotExpr{InfectionNode{std::move(base), std::move(eta), std::move(infecting)}});
}

AbstractKnot figure1_R() {
    LaurentPoly delta = LaurentPoly::from_coefficients(0, {Rational(1), Rational(-3), Rational(1)});
    LaurentPoly delta_sq = delta * delta;
    AbstractKnot r;
    r.name = "figure1_R";
    r.alexander = delta_sq.canonical();
    r.form = cyclic_form(delta_sq, LaurentPoly::one());
    r.module = r.form.module;
    r.declared_facts.push_back(
        make_fact(FactKind::Slice, "atlas: ribbon diagram whose derivative is an unlink"));
    r.declared_facts.push_back(
        make_fact(FactKind::UnknottedCurve, "atlas: eta bounds an embedded disk away from the knot"));
    return r;
}

TorsionModule base_module(const KnotExpr& base) {
    if (const auto* leaf = std::get_if<KnotLeaf>(&base.node))
        return blanchfield_from_seifert(leaf->seifert).module;
    if (const auto* ab = std::get_if<AbstractKnot>(&base.node)) return ab->module;
    throw Error("infection base must be a leaf or abstract knot");
}

RhoValue rho_zero_value() { return RhoValue{}; }

RhoValue rho_atom(const std::string& name) {
    RhoValue v;
    v.atoms[name] = 1;
    return v;
}

RhoValue rho_numeric(const RhoZero& r) {
    RhoValue v;
    v.exact_zero = r.exact_zero;
    if (!r.exact_zero) {
        v.lo = r.lo;
        v.hi = r.hi;
    }
    return v;
}

RhoValue sum_rho(const std::vector<RhoValue>& values) {
    RhoValue out;
    for (const auto& v : values) {
        if (!v.exact_zero) {
            out.exact_zero = false;
            out.lo += v.lo;
            out.hi += v.hi;
        }
        for (const auto& [name, coeff] : v.atoms) {
            long next = out.atoms[name] + coeff;
            if (next == 0)
                out.atoms.erase(name);
            else
                out.atoms[name] = next;
        }
    }
    return out;
}

RhoValue scale_rho(const RhoValue& v, long a) {
    if (a == 0) return rho_zero_value();
    RhoValue out;
    out.exact_zero = v.exact_zero;
    if (!v.exact_zero) {
        if (a > 0) {
            out.lo = v.lo * Rational(a);
            out.hi = v.hi * Rational(a);
        } else {
            out.lo = v.hi * Rational(a);
            out.hi = v.lo * Rational(a);
        }
    }
    for (const auto& [name, coeff] : v.atoms) out.atoms[name] = coeff * a;
    return out;
}

std::string to_string(const RhoValue& v) {
    std::string out;
    if (v.exact_zero)
        out = "0";
    else
        out = "[" + to_string(v.lo) + ", " + to_string(v.hi) + "]";
    for (const auto& [name, coeff] : v.atoms) {
        out += " + ";
        if (coeff != 1) out += std::to_string(coeff) + "*";
        out += name;
    }
    return out;
}

std::string rho1_atom_name(const std::string& leaf) { return "rho1(" + leaf + ")"; }
std::string rho0_atom_name(const std::string& leaf) { return "rho0(" + leaf + ")"; }
std::string rho_tilde_atom_name(const std::string& leaf, const LaurentPoly& p) {
    return "rhoTilde(" + leaf + "; p=" + to_string(p.canonical()) + ")";
}

RhoValue leaf_rho(const LaurentPoly& p, const KnotLeaf& leaf, long bound) {
    return leaf_rho_at(p, leaf, bound, "/");
}

RhoValue leaf_rho(const LaurentPoly& p, const AbstractKnot& leaf, long bound) {
    return leaf_rho_at(p, leaf, bound, "/");
}

RhoValue infection_rho(const LaurentPoly& p, const KnotExprPtr& base, const ModuleElement& eta,
                       const KnotExprPtr& infecting, long bound) {
    return infection_rho_at(p, base, eta, infecting, bound, "/infection");
}

RhoValue evaluate_rho(const LaurentPoly& p, const KnotExprPtr& expr, long bound) {
    return evaluate_rho_at(p, expr, bound, "");
}

}  // namespace concord
