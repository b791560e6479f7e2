// knot: invariants of a concrete knot given by a Seifert matrix.
//
//   knot info --twist n [--json]
//   knot info --seifert file [--json]

#include <concord/certify.hpp>
#include <concord/poly_io.hpp>
#include <concord/seifert.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace concord;
using json = nlohmann::ordered_json;

int main(int argc, char** argv) {
    CLI::App app{"knot invariants from Seifert matrices"};
    app.require_subcommand(1);

    long twist = 0;
    std::string seifert_path;
    bool as_json = false;

    auto* info = app.add_subcommand("info", "Alexander polynomial, signature jumps, rho^0");
    auto* tw = info->add_option("--twist", twist, "twist knot T_n");
    auto* sf = info->add_option("--seifert", seifert_path, "Seifert matrix file");
    tw->excludes(sf);
    info->add_flag("--json", as_json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        SeifertMatrix v;
        std::string name;
        if (tw->count()) {
            KnotLeaf leaf = twist_knot(twist);
            v = leaf.seifert;
            name = leaf.name;
        } else if (sf->count()) {
            v = load_seifert_file(seifert_path);
            name = seifert_path;
        } else {
            std::cerr << "error: one of --twist or --seifert is required\n";
            return 1;
        }
        SignatureFunction sig = signature_function(v);
        RhoZero r = rho0(v);
        if (as_json) {
            json j{{"knot", name},
                   {"genus", v.size() / 2},
                   {"alexander", to_string(sig.alexander)},
                   {"signature", signature_function_to_json(sig)},
                   {"rho0", rho_zero_to_json(r)}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "knot: " << name << "\n";
            std::cout << "alexander: " << to_string(sig.alexander) << "\n";
            std::cout << "trace polynomial: " << to_string(sig.trace) << "\n";
            std::cout << "signature jumps: " << sig.jumps.size() << "\n";
            for (const auto& jp : sig.jumps)
                std::cout << "  trace in [" << to_string(jp.interval.lo) << ", "
                          << to_string(jp.interval.hi) << "], factor " << to_string(jp.trace_factor)
                          << "\n";
            std::cout << "plateaus:";
            for (int p : sig.plateaus) std::cout << " " << p;
            std::cout << "\nsigma(-1) = " << sig.value_at_minus_one << "\n";
            if (r.exact_zero)
                std::cout << "rho0: exact zero\n";
            else
                std::cout << "rho0 in [" << to_string(r.lo) << ", " << to_string(r.hi) << "]\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
