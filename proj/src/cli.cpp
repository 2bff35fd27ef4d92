#include "cubiq/cli.hpp"

#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubiq/invariants.hpp"
#include "cubiq/verify.hpp"

namespace cubiq::cli {
namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/// "(3,3,4,4)" for the global z indices of a stored component.
std::string component_label(const SymTensor4::Key& key, int offset) {
    std::ostringstream os;
    os << '(';
    for (size_t k = 0; k < 4; ++k) {
        if (k) os << ',';
        os << key[k] + offset;
    }
    os << ')';
    return os.str();
}

int cmd_invariants(const CubicMap& map, const std::string& form_name, bool json,
                   std::ostream& out) {
    const CoeffTensor f = coeff_tensor(map);
    const GSet g = g_determinants(f);
    const bool printed = form_name == "printed";

    std::vector<SymTensor4> forms;
    forms.reserve(6);
    for (int q = 1; q <= 6; ++q)
        forms.push_back(printed ? omega_printed(q, g) : omega_derived(q, f));

    if (json) {
        nlohmann::json doc;
        doc["construction"] = form_name;
        nlohmann::json gj;
        const auto gs = g.as_array();
        for (size_t k = 0; k < 6; ++k) gj[GSet::labels[k]] = rational_str(gs[k]);
        doc["g"] = std::move(gj);
        nlohmann::json fj = nlohmann::json::array();
        for (int q = 1; q <= 6; ++q) {
            const auto& form = forms[static_cast<size_t>(q - 1)];
            nlohmann::json entry;
            entry["q"] = q;
            entry["polynomial"] = form_polynomial(form).str();
            nlohmann::json comps = nlohmann::json::array();
            for (const auto& [key, value] : form.components()) {
                if (value.is_zero()) continue;
                nlohmann::json c;
                nlohmann::json idx = nlohmann::json::array();
                for (int v : key) idx.push_back(v + form.var_offset());
                c["indices"] = std::move(idx);
                c["value"] = rational_str(value);
                comps.push_back(std::move(c));
            }
            entry["components"] = std::move(comps);
            fj.push_back(std::move(entry));
        }
        doc["forms"] = std::move(fj);
        out << doc.dump(2) << "\n";
        return 0;
    }

    out << "construction: " << form_name << "\n";
    const auto gs = g.as_array();
    for (size_t k = 0; k < 6; ++k) out << GSet::labels[k] << " = " << gs[k] << "\n";
    for (int q = 1; q <= 6; ++q) {
        const auto& form = forms[static_cast<size_t>(q - 1)];
        out << "omega[" << q << "] = " << form_polynomial(form).str() << "\n";
        for (const auto& [key, value] : form.components()) {
            if (value.is_zero()) continue;
            out << "  component " << component_label(key, form.var_offset()) << " = " << value
                << "\n";
        }
    }
    return 0;
}

int cmd_verify(const VerifyOptions& options, bool json, std::ostream& out) {
    const VerifyReport report = run_verification(options);
    out << (json ? report.to_json_text() : report.text());
    return report.all_pass ? 0 : 1;
}

int cmd_compose(const CubicMap& map, const AffineMap& phi, bool left, bool json,
                std::ostream& out) {
    const CubicMap composed = left ? compose_left(map, phi) : compose_right(map, phi);
    if (json) {
        nlohmann::json doc;
        doc["y1"] = composed.y1.str();
        doc["y2"] = composed.y2.str();
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << map_to_text(composed);
    return 0;
}

int cmd_check_thm43(const CubicMap& map, const AffineMap& phi, bool json, std::ostream& out) {
    const CompositionTable table = theorem43_check(coeff_tensor(map), phi.linear);
    if (json) {
        nlohmann::json doc;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : table.rows) {
            nlohmann::json r;
            r["label"] = row.label;
            r["lhs"] = rational_str(row.lhs);
            r["rhs"] = rational_str(row.rhs);
            r["equal"] = row.lhs == row.rhs;
            rows.push_back(std::move(r));
        }
        doc["rows"] = std::move(rows);
        doc["all_equal"] = table.all_equal;
        out << doc.dump(2) << "\n";
    } else {
        for (const auto& row : table.rows) {
            out << row.label << ": lhs = " << row.lhs << ", rhs = " << row.rhs << ", "
                << (row.lhs == row.rhs ? "equal" : "MISMATCH") << "\n";
        }
        out << (table.all_equal ? "all six rows equal\n" : "ROWS DIFFER\n");
    }
    return table.all_equal ? 0 : 1;
}

int cmd_discrepancies(bool json, std::ostream& out) {
    const DiscrepancyReport report = discrepancy_report();
    out << (json ? report.to_json_text() : report.text());
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Determinants and quartic forms of cubic transformations of the plane"};
    app.name("cubiq");
    app.require_subcommand(1);

    std::string map_path, matrix_path;
    std::string form_name = "derived";
    bool json = false, use_random = false, left = false, right = false;
    int trials = 100;
    std::uint64_t seed = 0;

    auto* inv = app.add_subcommand("invariants", "Print the six determinants and quartic forms");
    inv->add_option("map", map_path, "cubic map file")->required();
    inv->add_option("--form", form_name, "form construction: printed or derived")
        ->check(CLI::IsMember({"printed", "derived"}))
        ->capture_default_str();
    inv->add_flag("--json", json, "machine-readable output");

    auto* ver = app.add_subcommand("verify", "Run the transformation-law identity suite");
    ver->add_option("map", map_path, "cubic map file (omit with --random)");
    ver->add_flag("--random", use_random, "draw coefficient tensors at random");
    ver->add_option("--trials", trials, "trials per law")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()))
        ->capture_default_str();
    ver->add_option("--seed", seed, "base seed for the trial streams")->capture_default_str();
    ver->add_flag("--json", json, "machine-readable output");

    auto* comp = app.add_subcommand("compose", "Compose with an affine map, print the result");
    comp->add_option("map", map_path, "cubic map file")->required();
    comp->add_option("matrix", matrix_path, "affine map file")->required();
    auto* left_flag = comp->add_flag("--left", left, "compose on the left (phi^-1 after the map)");
    auto* right_flag = comp->add_flag("--right", right, "compose on the right (phi before the map)");
    left_flag->excludes(right_flag);
    comp->add_flag("--json", json, "machine-readable output");

    auto* thm = app.add_subcommand("check-thm43",
                                   "Composed determinants versus det T times the form values");
    thm->add_option("map", map_path, "cubic map file")->required();
    thm->add_option("matrix", matrix_path, "affine map file")->required();
    thm->add_flag("--json", json, "machine-readable output");

    auto* disc = app.add_subcommand("discrepancies",
                                    "Symbolic three-way comparison of the form constructions");
    disc->add_flag("--json", json, "machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (inv->parsed()) {
            return cmd_invariants(parse_cubic_map(read_file(map_path)), form_name, json, out);
        }
        if (ver->parsed()) {
            if (map_path.empty() == !use_random) {
                err << "error: verify needs exactly one of a map file or --random\n";
                return 2;
            }
            VerifyOptions options;
            options.trials = trials;
            options.seed = seed;
            if (!use_random) options.map = parse_cubic_map(read_file(map_path));
            return cmd_verify(options, json, out);
        }
        if (comp->parsed()) {
            if (left == right) {
                err << "error: compose needs exactly one of --left or --right\n";
                return 2;
            }
            const CubicMap map = parse_cubic_map(read_file(map_path));
            const AffineMap phi = parse_affine_map(read_file(matrix_path));
            if (left && phi.linear.det().is_zero()) {
                err << "error: --left requires an invertible matrix\n";
                return 2;
            }
            return cmd_compose(map, phi, left, json, out);
        }
        if (thm->parsed()) {
            const CubicMap map = parse_cubic_map(read_file(map_path));
            const AffineMap phi = parse_affine_map(read_file(matrix_path));
            return cmd_check_thm43(map, phi, json, out);
        }
        if (disc->parsed()) {
            return cmd_discrepancies(json, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace cubiq::cli
