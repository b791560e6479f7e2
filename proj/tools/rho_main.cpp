// rho: evaluate the localized rho-invariant calculus over a family's
// iterated infection tower.
//
//   rho eval --p "<poly>" --family file --expr <knot-name> [--bound B] [--json]
//
// The expression named by a knot is its full tower K^depth from the family
// file; --depth evaluates a shallower stage.

#include <concord/certify.hpp>
#include <concord/poly_io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace concord;
using json = nlohmann::ordered_json;

int main(int argc, char** argv) {
    CLI::App app{"localized rho-invariant calculus"};
    app.require_subcommand(1);

    std::string p_text, family_path, expr_name;
    long bound = -1;
    long depth = -1;
    bool as_json = false;

    auto* ev = app.add_subcommand("eval", "evaluate rho~^1_p of a family tower");
    ev->add_option("--p", p_text, "localizing polynomial")->required();
    ev->add_option("--family", family_path, "family file")->required();
    ev->add_option("--expr", expr_name, "knot name from the family")->required();
    ev->add_option("--bound", bound, "coprimality search bound (default: family bound)");
    ev->add_option("--depth", depth, "evaluate the tower at this depth (default: family depth)");
    ev->add_flag("--json", as_json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        FamilySpec spec = parse_family(family_path);
        if (bound > 0) spec.bound = bound;
        if (depth >= 0) {
            if (depth > spec.depth) throw Error("requested depth exceeds the family depth");
            spec.depth = depth;
        }
        size_t index = spec.knots.size();
        for (size_t i = 0; i < spec.knots.size(); ++i)
            if (spec.knots[i].name == expr_name) index = i;
        if (index == spec.knots.size()) throw Error("no knot named '" + expr_name + "' in family");
        LaurentPoly p = parse_poly(p_text);
        RhoValue v = evaluate_rho(p, family_tower(spec, index), spec.bound);
        if (as_json) {
            json j{{"family", spec.name},
                   {"expr", expr_name},
                   {"depth", spec.depth},
                   {"p", to_string(p.canonical())},
                   {"value", rho_value_to_json(v)}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "rho~^1_p(" << expr_name << "^" << spec.depth << ") = " << to_string(v)
                      << "\n";
        }
    } catch (const IndeterminateError& e) {
        std::cerr << "indeterminate: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
