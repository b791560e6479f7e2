// module: Alexander modules, Blanchfield forms, strong localization, and
// anisotropy certificates.
//
//   module blanchfield --seifert file [--json]
//   module localize --seifert file --at "<p>" [--bound B] [--json]
//   module aniso --delta "<D>" --p "<p>" [--bound B] [--json]

#include <concord/blanchfield.hpp>
#include <concord/certify.hpp>
#include <concord/poly_io.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace concord;
using json = nlohmann::ordered_json;

int main(int argc, char** argv) {
    CLI::App app{"Blanchfield forms and strong localization"};
    app.require_subcommand(1);

    std::string seifert_path, at_text, delta_text, p_text;
    long bound = default_bound();
    bool as_json = false;

    auto* bl = app.add_subcommand("blanchfield", "module and pairing of a Seifert matrix");
    bl->add_option("--seifert", seifert_path, "Seifert matrix file")->required();
    bl->add_flag("--json", as_json, "emit JSON");

    auto* loc = app.add_subcommand("localize", "strong localization of the Alexander module");
    loc->add_option("--seifert", seifert_path, "Seifert matrix file")->required();
    loc->add_option("--at", at_text, "localize at this polynomial")->required();
    loc->add_option("--bound", bound, "coprimality search bound");
    loc->add_flag("--json", as_json, "emit JSON");

    auto* an = app.add_subcommand("aniso", "strong p-anisotropy certificate");
    an->add_option("--delta", delta_text, "Alexander polynomial")->required();
    an->add_option("--p", p_text, "localizing polynomial")->required();
    an->add_option("--bound", bound, "coprimality search bound");
    an->add_flag("--json", as_json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bl->parsed()) {
            BlanchfieldForm form = blanchfield_from_seifert(load_seifert_file(seifert_path));
            if (as_json) {
                std::cout << blanchfield_to_json(form).dump(2) << "\n";
            } else {
                std::cout << "divisors:";
                for (const auto& d : form.module.divisors) std::cout << " (" << to_string(d) << ")";
                std::cout << "\n";
                for (size_t i = 0; i < form.gram.size(); ++i)
                    for (size_t j = 0; j < form.gram.size(); ++j)
                        std::cout << "Bl(g" << i << ", g" << j << ") = ("
                                  << to_string(form.gram[i][j].num) << ") / ("
                                  << to_string(form.gram[i][j].den) << ")\n";
            }
        } else if (loc->parsed()) {
            BlanchfieldForm form = blanchfield_from_seifert(load_seifert_file(seifert_path));
            LocalizedModule lm = localize(form.module, parse_poly(at_text), bound);
            if (as_json) {
                std::cout << localized_module_to_json(lm).dump(2) << "\n";
            } else {
                if (lm.is_trivial())
                    std::cout << "localized module: 0\n";
                else {
                    std::cout << "localized divisors:";
                    for (const auto& d : lm.divisors) std::cout << " (" << to_string(d) << ")";
                    std::cout << "\n";
                }
                if (lm.conservative)
                    std::cout << "conservative: an Unknown coprimality verdict retained a factor\n";
                for (const auto& fd : lm.provenance)
                    std::cout << "  factor (" << to_string(fd.factor) << ")^" << fd.multiplicity
                              << " of divisor " << fd.divisor_index << ": "
                              << to_string(fd.verdict.status) << " -> "
                              << (fd.retained ? "retained" : "discarded") << "\n";
            }
        } else if (an->parsed()) {
            StrongAnisotropyCert cert =
                strongly_p_anisotropic(parse_poly(delta_text), parse_poly(p_text), bound);
            if (as_json) {
                std::cout << strong_anisotropy_to_json(cert).dump(2) << "\n";
            } else {
                std::cout << (cert.certified ? "Certified" : "Unknown") << "\n";
                std::cout << "h = gcd(Delta, p) = " << to_string(cert.h) << "\n";
                std::cout << "Delta/h = " << to_string(cert.cofactor) << "\n";
                if (cert.certified)
                    std::cout << "mechanism: " << cert.mechanism << "\n";
                else
                    std::cout << "reason: " << cert.reason << "\n";
            }
            return cert.certified ? 0 : 2;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
