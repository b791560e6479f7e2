// poly: exact Laurent polynomial operations from the shell.
//
//   poly strong-coprime "<p>" "<q>" --bound B [--json]
//   poly factor "<p>" [--json]
//   poly gcd "<p>" "<q>" [--json]

#include <concord/certify.hpp>
#include <concord/factor.hpp>
#include <concord/poly_io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace concord;
using json = nlohmann::ordered_json;

int main(int argc, char** argv) {
    CLI::App app{"exact Laurent polynomial toolkit"};
    app.require_subcommand(1);

    std::string p_text, q_text;
    long bound = default_bound();
    bool as_json = false;

    auto* sc = app.add_subcommand("strong-coprime", "decide or certify strong coprimality");
    sc->add_option("p", p_text, "first polynomial")->required();
    sc->add_option("q", q_text, "second polynomial")->required();
    sc->add_option("--bound", bound, "refutation search bound");
    sc->add_flag("--json", as_json, "emit JSON");

    auto* fc = app.add_subcommand("factor", "complete factorization over Q");
    fc->add_option("p", p_text, "polynomial")->required();
    fc->add_flag("--json", as_json, "emit JSON");

    auto* gc = app.add_subcommand("gcd", "canonical-associate gcd");
    gc->add_option("p", p_text, "first polynomial")->required();
    gc->add_option("q", q_text, "second polynomial")->required();
    gc->add_flag("--json", as_json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc->parsed()) {
            CoprimalityVerdict v = strongly_coprime(parse_poly(p_text), parse_poly(q_text), bound);
            if (as_json) {
                std::cout << coprimality_to_json(v).dump(2) << "\n";
            } else {
                std::cout << to_string(v.status) << "\n";
                if (v.witness)
                    std::cout << "witness: m=" << v.witness->m << " n=" << v.witness->n
                              << " conj_p=" << v.witness->conjugate_p
                              << " conj_q=" << v.witness->conjugate_q
                              << " common_factor=" << to_string(v.witness->common_factor) << "\n";
                if (v.proof != CoprimalityProof::None)
                    std::cout << "proof: " << to_string(v.proof) << "\n";
                std::cout << "bound_used: " << v.bound_used << "\ndetail: " << v.detail << "\n";
            }
        } else if (fc->parsed()) {
            Factorization f = factor(parse_poly(p_text));
            if (as_json) {
                json j{{"sign", f.sign}, {"t_power", f.t_power}, {"scalar", to_string(f.scalar)}};
                json factors = json::array();
                for (const auto& [irr, mult] : f.factors)
                    factors.push_back(json{{"factor", to_string(irr)}, {"multiplicity", mult}});
                j["factors"] = std::move(factors);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "unit: " << (f.sign < 0 ? "-" : "") << to_string(f.scalar) << "*t^"
                          << f.t_power << "\n";
                for (const auto& [irr, mult] : f.factors)
                    std::cout << "(" << to_string(irr) << ")^" << mult << "\n";
            }
        } else if (gc->parsed()) {
            LaurentPoly g = gcd(parse_poly(p_text), parse_poly(q_text));
            if (as_json)
                std::cout << json{{"gcd", to_string(g)}}.dump(2) << "\n";
            else
                std::cout << to_string(g) << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
