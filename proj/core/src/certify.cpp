#include <concord/certify.hpp>

#include <concord/factor.hpp>
#include <concord/poly_io.hpp>

#include <algorithm>

namespace concord {

namespace {

using json = nlohmann::ordered_json;

json witness_to_json(const CoprimalityWitness& w) {
    return json{{"m", w.m},
                {"n", w.n},
                {"conjugate_p", w.conjugate_p},
                {"conjugate_q", w.conjugate_q},
                {"common_factor", to_string(w.common_factor)}};
}

json verdict_to_json(const CoprimalityVerdict& v) {
    json j{{"status", to_string(v.status)}};
    if (v.witness) j["witness"] = witness_to_json(*v.witness);
    if (v.proof != CoprimalityProof::None) j["proof_tag"] = to_string(v.proof);
    j["bound_used"] = v.bound_used;
    j["detail"] = v.detail;
    return j;
}

json interval_to_json(const Rational& lo, const Rational& hi) {
    return json{{"lo", to_string(lo)}, {"hi", to_string(hi)}};
}

std::string fact_text(const DeclaredFact& f) {
    std::string s = to_string(f.kind);
    if (f.kind == FactKind::PrimeDecomposition) {
        s += " [";
        for (size_t i = 0; i < f.factor_names.size(); ++i) {
            if (i) s += ", ";
            s += f.factor_names[i];
        }
        s += "]";
    }
    s += ": " + f.citation;
    return s;
}

const DeclaredFact* find_fact(const std::vector<DeclaredFact>& facts, FactKind kind) {
    for (const auto& f : facts)
        if (f.kind == kind) return &f;
    return nullptr;
}

}  // namespace

std::string to_string(HypothesisStatus s) {
    switch (s) {
        case HypothesisStatus::Verified: return "Verified";
        case HypothesisStatus::AssumedDeclared: return "AssumedDeclared";
        case HypothesisStatus::Failed: return "Failed";
        case HypothesisStatus::UnknownAtBound: return "UnknownAtBound";
    }
    return "?";
}

const char* toolchain_version() { return "0.1.0"; }

std::vector<HypothesisResult> check_hypotheses(const FamilySpec& spec) {
    std::vector<HypothesisResult> out;
    std::vector<LaurentPoly> alexanders;
    alexanders.reserve(spec.knots.size());
    for (const auto& k : spec.knots) alexanders.push_back(alexander_poly(k.seifert));

    // (1) strongly coprime Alexander polynomials
    {
        HypothesisResult h{"H1: Alexander polynomials pairwise strongly coprime",
                           HypothesisStatus::Verified, json::object()};
        json matrix = json::array();
        if (spec.knots.size() >= 2) {
            auto m = strongly_coprime_family(alexanders, spec.bound);
            bool failed = false, unknown = false;
            for (size_t i = 0; i < m.size(); ++i) {
                json row = json::array();
                for (size_t j = 0; j < m.size(); ++j) {
                    row.push_back(verdict_to_json(m[i][j]));
                    if (i == j) continue;
                    if (m[i][j].status == CoprimalityStatus::NotStronglyCoprime) failed = true;
                    if (m[i][j].status == CoprimalityStatus::UnknownUpToBound) unknown = true;
                }
                matrix.push_back(std::move(row));
            }
            h.status = failed ? HypothesisStatus::Failed
                              : (unknown ? HypothesisStatus::UnknownAtBound
                                         : HypothesisStatus::Verified);
        } else {
            h.evidence["note"] = "single knot: no pairs to check";
        }
        h.evidence["polynomials"] = [&] {
            json a = json::array();
            for (const auto& p : alexanders) a.push_back(to_string(p));
            return a;
        }();
        if (!matrix.empty()) h.evidence["matrix"] = std::move(matrix);
        out.push_back(std::move(h));
    }

    // (2) vanishing Tristram-Levine signature integrals
    {
        HypothesisResult h{"H2: Tristram-Levine signature integrals vanish",
                           HypothesisStatus::Verified, json::object()};
        json leaves = json::array();
        bool failed = false, unknown = false;
        for (const auto& k : spec.knots) {
            SignatureFunction sf = signature_function(k.seifert);
            json leaf{{"knot", k.name}, {"jumps", sf.jumps.size()}};
            leaf["plateaus"] = sf.plateaus;
            if (sf.identically_zero()) {
                leaf["rho0"] = "exact zero";
            } else {
                RhoZero r = rho0(k.seifert);
                leaf["rho0_interval"] = interval_to_json(r.lo, r.hi);
                if (r.lo > 0 || r.hi < 0)
                    failed = true;  // interval excludes zero
                else
                    unknown = true;  // contains zero but not exact
            }
            leaves.push_back(std::move(leaf));
        }
        h.status = failed ? HypothesisStatus::Failed
                          : (unknown ? HypothesisStatus::UnknownAtBound
                                     : HypothesisStatus::Verified);
        h.evidence["leaves"] = std::move(leaves);
        out.push_back(std::move(h));
    }

    // (3) declared prime factors have square-free Alexander polynomials
    {
        HypothesisResult sq{"H3: declared prime factors have square-free Alexander polynomials",
                            HypothesisStatus::Verified, json::object()};
        HypothesisResult decl{"H3: prime decompositions declared", HypothesisStatus::AssumedDeclared,
                              json::object()};
        json checks = json::array();
        json decls = json::array();
        bool failed = false;
        for (size_t i = 0; i < spec.knots.size(); ++i) {
            const auto& k = spec.knots[i];
            const DeclaredFact* fact = find_fact(k.declared_facts, FactKind::PrimeDecomposition);
            if (!fact) {
                failed = true;
                checks.push_back(json{{"knot", k.name}, {"error", "no prime decomposition declared"}});
                continue;
            }
            decls.push_back(fact_text(*fact));
            for (const auto& fname : fact->factor_names) {
                const KnotLeaf* factor_leaf = nullptr;
                for (size_t j = 0; j < spec.knots.size(); ++j)
                    if (spec.knots[j].name == fname) factor_leaf = &spec.knots[j];
                LaurentPoly delta =
                    fname == k.name ? alexanders[i]
                                    : (factor_leaf ? alexander_poly(factor_leaf->seifert)
                                                   : LaurentPoly::zero());
                if (delta.is_zero()) {
                    failed = true;
                    checks.push_back(json{{"knot", k.name},
                                          {"factor", fname},
                                          {"error", "factor name does not resolve to a knot"}});
                    continue;
                }
                bool ok = is_squarefree(delta);
                checks.push_back(json{{"knot", k.name},
                                      {"factor", fname},
                                      {"alexander", to_string(delta)},
                                      {"square_free", ok}});
                if (!ok) failed = true;
            }
        }
        sq.status = failed ? HypothesisStatus::Failed : HypothesisStatus::Verified;
        sq.evidence["checks"] = std::move(checks);
        decl.evidence["declarations"] = std::move(decls);
        if (failed && decl.evidence["declarations"].empty())
            decl.status = HypothesisStatus::Failed;
        out.push_back(std::move(sq));
        out.push_back(std::move(decl));
    }

    // (4) nonvanishing rho^1, by declaration
    {
        HypothesisResult h{"H4: rho^1 invariants declared nonzero",
                           HypothesisStatus::AssumedDeclared, json::object()};
        json decls = json::array();
        bool failed = false;
        for (const auto& k : spec.knots) {
            const DeclaredFact* fact = find_fact(k.declared_facts, FactKind::Rho1Nonzero);
            if (!fact) {
                failed = true;
                decls.push_back(json{{"knot", k.name}, {"error", "no rho1_nonzero declaration"}});
            } else {
                decls.push_back(json{{"knot", k.name}, {"citation", fact->citation}});
            }
        }
        h.status = failed ? HypothesisStatus::Failed : HypothesisStatus::AssumedDeclared;
        h.evidence["declarations"] = std::move(decls);
        out.push_back(std::move(h));
    }

    // per-level: slice and unknotted declarations, doubly anisotropic pairs.
    // Distinct bases may appear per knot; deduplicate by base identity.
    for (long j = 1; j <= spec.depth; ++j) {
        std::vector<std::string> seen;
        for (size_t i = 0; i < spec.knots.size(); ++i) {
            const LevelBase& base = spec.levels[i][static_cast<size_t>(j - 1)];
            if (std::find(seen.begin(), seen.end(), base.knot.name) != seen.end()) continue;
            seen.push_back(base.knot.name);
            std::string tag = "level " + std::to_string(j) + " (" + base.knot.name + ")";

            const DeclaredFact* slice = find_fact(base.knot.declared_facts, FactKind::Slice);
            out.push_back({tag + ": base knot is slice",
                           slice ? HypothesisStatus::AssumedDeclared : HypothesisStatus::Failed,
                           slice ? json{{"citation", slice->citation}}
                                 : json{{"error", "missing declaration"}}});
            const DeclaredFact* unknot =
                find_fact(base.knot.declared_facts, FactKind::UnknottedCurve);
            out.push_back({tag + ": infection curve is unknotted",
                           unknot ? HypothesisStatus::AssumedDeclared : HypothesisStatus::Failed,
                           unknot ? json{{"citation", unknot->citation}}
                                  : json{{"error", "missing declaration"}}});

            DoublyAnisotropicCert cert = doubly_anisotropic_cert(base.knot.module, base.eta);
            json ev{{"module_order", to_string(base.knot.module.order())}};
            if (cert.certified) {
                ev["delta"] = to_string(cert.delta);
                ev["prime_symmetric_factor"] = to_string(cert.prime_symmetric_factor);
            } else {
                ev["reason"] = cert.reason;
            }
            out.push_back({tag + ": (R, eta) doubly anisotropic",
                           cert.certified ? HypothesisStatus::Verified
                                          : HypothesisStatus::UnknownAtBound,
                           std::move(ev)});
        }
    }
    return out;
}

bool conclusion_allowed(const std::vector<HypothesisResult>& hypotheses) {
    for (const auto& h : hypotheses)
        if (h.status == HypothesisStatus::Failed || h.status == HypothesisStatus::UnknownAtBound)
            return false;
    return true;
}

Certificate certify_independence(const FamilySpec& spec) {
    Certificate cert;
    cert.family = spec.name;
    cert.depth = spec.depth;
    cert.bound = spec.bound;
    cert.hypotheses = check_hypotheses(spec);
    bool ok = conclusion_allowed(cert.hypotheses);
    for (const auto& h : cert.hypotheses) {
        if (h.status == HypothesisStatus::AssumedDeclared) {
            if (h.evidence.contains("citation"))
                cert.assumptions.push_back(h.name + " — " +
                                           h.evidence["citation"].get<std::string>());
            else if (h.evidence.contains("declarations"))
                for (const auto& d : h.evidence["declarations"]) {
                    if (d.is_string())
                        cert.assumptions.push_back(h.name + " — " + d.get<std::string>());
                    else if (d.contains("citation"))
                        cert.assumptions.push_back(h.name + " — " + d["knot"].get<std::string>() +
                                                   ": " + d["citation"].get<std::string>());
                }
            else
                cert.assumptions.push_back(h.name);
        }
    }
    cert.concluded = ok;
    if (ok) {
        std::string family_list = "{";
        for (size_t i = 0; i < spec.knots.size(); ++i) {
            if (i) family_list += ", ";
            family_list += spec.knots[i].name + "^" + std::to_string(spec.depth);
        }
        family_list += "}";
        std::string n = std::to_string(spec.depth);
        std::string lower =
            spec.depth == 0 ? "the full concordance group"
                            : "F_{" + std::to_string(spec.depth) + "-0.5}";
        cert.statement = family_list + " is linearly independent in the concordance group modulo (" +
                         n + "+1.5)-solvable knots; equivalently its image in " + lower + "/F_{" +
                         n + "+1.5} is linearly independent" +
                         (spec.depth == 0 ? " (F_{-0.5} read as the full concordance group)" : "") +
                         ", granted the listed assumptions.";
    }
    return cert;
}

nlohmann::ordered_json certificate_to_json(const Certificate& c) {
    json j;
    j["schema"] = "concord-certificate/1";
    j["toolchain"] = json{{"version", toolchain_version()},
                          {"bound", c.bound},
                          {"conventions",
                           json{{"twist_knot", "V = [[1,1],[0,n]]; T_-1 figure-eight, T_1 trefoil"},
                                {"rho0_normalization", "signature integral over circle measure 1"},
                                {"blanchfield",
                                 "Bl(x,y) = (1-t) invol(x)^T (tV - V^T)^{-1} y in Q(t)/Q[t^{+-1}]"},
                                {"coprimality",
                                 "exponent bound from Weil-height upper bounds against "
                                 "Schinzel/Blanksby-Montgomery lower bounds"}}}};
    j["family"] = c.family;
    j["depth"] = c.depth;
    json hyps = json::array();
    for (const auto& h : c.hypotheses)
        hyps.push_back(json{{"name", h.name}, {"status", to_string(h.status)},
                            {"evidence", h.evidence}});
    j["hypotheses"] = std::move(hyps);
    if (c.concluded) {
        j["conclusion"] = json{{"statement", c.statement},
                               {"claim",
                                json{{"family", c.family},
                                     {"depth", c.depth},
                                     {"modulo", "(" + std::to_string(c.depth) + "+1.5)-solvable"}}},
                               {"assumptions", c.assumptions}};
    } else {
        j["conclusion"] = nullptr;
    }
    return j;
}

std::string render_certificate_text(const nlohmann::ordered_json& report) {
    std::string out;
    out += "certificate: " + report["family"].get<std::string>() + " (depth " +
           std::to_string(report["depth"].get<long>()) + ", bound " +
           std::to_string(report["toolchain"]["bound"].get<long>()) + ")\n";
    for (const auto& h : report["hypotheses"]) {
        out += "  [" + h["status"].get<std::string>() + "] " + h["name"].get<std::string>() + "\n";
    }
    if (report["conclusion"].is_null()) {
        out += "no conclusion: at least one hypothesis failed or is unknown at this bound\n";
    } else {
        out += "conclusion: " + report["conclusion"]["statement"].get<std::string>() + "\n";
        out += "assumptions:\n";
        for (const auto& a : report["conclusion"]["assumptions"])
            out += "  - " + a.get<std::string>() + "\n";
    }
    return out;
}

RhoValue obstruction_of_combination(const FamilySpec& spec, const std::vector<long>& coefficients,
                                    const LaurentPoly& p) {
    if (coefficients.size() != spec.knots.size())
        throw Error("coefficient count does not match knot count");
    std::vector<RhoValue> parts;
    parts.reserve(spec.knots.size());
    for (size_t i = 0; i < spec.knots.size(); ++i)
        parts.push_back(scale_rho(leaf_rho(p, spec.knots[i], spec.bound), coefficients[i]));
    return sum_rho(parts);
}

nlohmann::ordered_json coprimality_to_json(const CoprimalityVerdict& v) { return verdict_to_json(v); }

nlohmann::ordered_json rho_value_to_json(const RhoValue& v) {
    json j;
    j["exact_zero"] = v.exact_zero;
    if (!v.exact_zero) j["interval"] = interval_to_json(v.lo, v.hi);
    json atoms = json::object();
    for (const auto& [name, coeff] : v.atoms) atoms[name] = coeff;
    j["atoms"] = std::move(atoms);
    return j;
}

nlohmann::ordered_json rho_zero_to_json(const RhoZero& r) {
    json j;
    j["exact_zero"] = r.exact_zero;
    if (!r.exact_zero) j["interval"] = interval_to_json(r.lo, r.hi);
    json terms = json::array();
    for (const auto& t : r.terms)
        terms.push_back(json{{"plateau", t.plateau},
                             {"arccos_arg", interval_to_json(t.arccos_arg.lo, t.arccos_arg.hi)}});
    j["terms"] = std::move(terms);
    return j;
}

nlohmann::ordered_json signature_function_to_json(const SignatureFunction& sf) {
    json j;
    j["alexander"] = to_string(sf.alexander);
    j["trace_polynomial"] = to_string(sf.trace);
    json jumps = json::array();
    for (const auto& jp : sf.jumps)
        jumps.push_back(json{{"trace_factor", to_string(jp.trace_factor)},
                             {"interval", interval_to_json(jp.interval.lo, jp.interval.hi)},
                             {"multiplicity", jp.interval.multiplicity}});
    j["jumps"] = std::move(jumps);
    j["plateaus"] = sf.plateaus;
    j["value_at_minus_one"] = sf.value_at_minus_one;
    return j;
}

nlohmann::ordered_json blanchfield_to_json(const BlanchfieldForm& bl) {
    json j;
    json divisors = json::array();
    for (const auto& d : bl.module.divisors) divisors.push_back(to_string(d));
    j["divisors"] = std::move(divisors);
    json gram = json::array();
    for (const auto& row : bl.gram) {
        json r = json::array();
        for (const auto& e : row)
            r.push_back(json{{"num", to_string(e.num)}, {"den", to_string(e.den)}});
        gram.push_back(std::move(r));
    }
    j["gram"] = std::move(gram);
    return j;
}

nlohmann::ordered_json localized_module_to_json(const LocalizedModule& loc) {
    json j;
    j["p"] = to_string(loc.p);
    json divisors = json::array();
    for (const auto& d : loc.divisors) divisors.push_back(to_string(d));
    j["divisors"] = std::move(divisors);
    j["conservative"] = loc.conservative;
    json prov = json::array();
    for (const auto& fd : loc.provenance)
        prov.push_back(json{{"divisor_index", fd.divisor_index},
                            {"factor", to_string(fd.factor)},
                            {"multiplicity", fd.multiplicity},
                            {"retained", fd.retained},
                            {"verdict", verdict_to_json(fd.verdict)}});
    j["provenance"] = std::move(prov);
    return j;
}

nlohmann::ordered_json strong_anisotropy_to_json(const StrongAnisotropyCert& c) {
    json j;
    j["certified"] = c.certified;
    j["alexander"] = to_string(c.alexander);
    j["p"] = to_string(c.p);
    j["h"] = to_string(c.h);
    j["cofactor"] = to_string(c.cofactor);
    if (c.certified)
        j["mechanism"] = c.mechanism;
    else
        j["reason"] = c.reason;
    if (c.coprimality) j["cofactor_coprimality"] = verdict_to_json(*c.coprimality);
    return j;
}

}  // namespace concord
