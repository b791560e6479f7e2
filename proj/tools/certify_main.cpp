// certify: check the hypotheses of the independence theorem for a family
// file and emit a replayable certificate.
//
//   certify <file> [--bound B] [--out report.json] [--coeffs a1,a2,...]
//           [--p "<poly>"] [--quiet]
//
// exit code 0: conclusion emitted; 2: no conclusion; 1: error

#include <concord/certify.hpp>
#include <concord/poly_io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace concord;
using json = nlohmann::ordered_json;

int main(int argc, char** argv) {
    CLI::App app{"independence certificates for iterated-infection families"};

    std::string family_path, out_path, coeffs_text, p_text;
    long bound = -1;
    bool quiet = false;

    app.add_option("file", family_path, "family description file")->required();
    app.add_option("--bound", bound, "coprimality search bound (overrides the file)");
    app.add_option("--out", out_path, "write the JSON report here");
    app.add_option("--coeffs", coeffs_text, "comma-separated integers for the obstruction");
    app.add_option("--p", p_text, "polynomial for the obstruction evaluation");
    app.add_flag("--quiet", quiet, "suppress the text rendering");

    CLI11_PARSE(app, argc, argv);

    try {
        FamilySpec spec = parse_family(family_path);
        if (bound > 0) spec.bound = bound;

        Certificate cert = certify_independence(spec);
        json report = certificate_to_json(cert);

        if (!coeffs_text.empty() || !p_text.empty()) {
            if (coeffs_text.empty() || p_text.empty())
                throw Error("--coeffs and --p must be given together");
            std::vector<long> coeffs;
            std::string cur;
            for (char c : coeffs_text + ",") {
                if (c == ',') {
                    if (!cur.empty()) coeffs.push_back(std::stol(cur));
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            RhoValue v = obstruction_of_combination(spec, coeffs, parse_poly(p_text));
            report["obstruction"] = json{{"p", to_string(parse_poly(p_text).canonical())},
                                         {"coefficients", coeffs},
                                         {"value", rho_value_to_json(v)}};
        }

        std::string serialized = report.dump(2);
        serialized += "\n";
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw Error("cannot write " + out_path);
            out << serialized;
        }
        if (!quiet) std::cout << render_certificate_text(report);
        if (out_path.empty() && quiet) std::cout << serialized;
        return cert.concluded ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
