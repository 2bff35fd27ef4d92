#include "cubiq/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

namespace cubiq {
namespace {

/// splitmix64-style mixing so each (base seed, law, trial) triple gets an
/// independent stream.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t law, std::uint64_t trial) {
    std::uint64_t x = base + 0x9E3779B97F4A7C15ull * (law + 1) + 0xBF58476D1CE4E5B9ull * (trial + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

std::string first_residual(const CheckResult& result) {
    if (result.pass) return {};
    std::ostringstream os;
    os << result.residuals.front().where << ": " << result.residuals.front().difference;
    return os.str();
}

std::string table_residual(const CompositionTable& table) {
    if (table.all_equal) return {};
    std::ostringstream os;
    bool first = true;
    for (const auto& row : table.rows) {
        if (row.lhs == row.rhs) continue;
        if (!first) os << "; ";
        first = false;
        os << row.label << ": " << row.lhs << " != " << row.rhs;
    }
    return os.str();
}

CheckResult pseudo_invariance(const Matrix2& s) {
    CheckResult result;
    const PseudoArray lower = PseudoArray::fundamental_lower();
    const PseudoArray upper = PseudoArray::fundamental_upper();
    const PseudoArray lower_out = pseudo_transform(lower, s);
    const PseudoArray upper_out = pseudo_transform(upper, s);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            const std::array<int, 2> idx{i, j};
            std::ostringstream wl, wu;
            wl << "d_" << i << j;
            wu << "d^" << i << j;
            result.record(wl.str(), lower_out.at(idx) - lower.at(idx));
            result.record(wu.str(), upper_out.at(idx) - upper.at(idx));
        }
    return result;
}

CheckResult roundtrip_check(const CoeffTensor& f, const Matrix2& s) {
    CheckResult result;
    const CoeffTensor forward = change_coordinates(f, s);
    const CoeffTensor back = change_coordinates_inverse(forward, s);
    for (int i = 1; i <= 2; ++i)
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n)
                for (int p = 1; p <= 2; ++p) {
                    std::ostringstream where;
                    where << "F" << i << "_" << m << n << p;
                    result.record(where.str(), back.at(i, m, n, p) - f.at(i, m, n, p));
                }
    return result;
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    struct Law {
        const char* name;
        std::function<std::pair<bool, std::string>(TrialRng&, const CoeffTensor&)> run;
    };

    const auto from_check = [](const CheckResult& r) {
        return std::make_pair(r.pass, first_residual(r));
    };

    const std::vector<Law> laws = {
        {"tensoriality",
         [&](TrialRng& rng, const CoeffTensor& f) {
             return from_check(check_tensoriality(f, rng.invertible_matrix()));
         }},
        {"left-composition",
         [&](TrialRng& rng, const CoeffTensor& f) {
             return from_check(left_law_check(f, rng.invertible_matrix()));
         }},
        {"right-composition",
         [&](TrialRng& rng, const CoeffTensor& f) {
             return from_check(right_law_check(f, rng.invertible_matrix()));
         }},
        {"right-composition-singular",
         [&](TrialRng& rng, const CoeffTensor& f) {
             return from_check(right_law_check(f, rng.singular_matrix()));
         }},
        {"composition-determinants",
         [&](TrialRng& rng, const CoeffTensor& f) {
             const CompositionTable table = theorem43_check(f, rng.matrix());
             return std::make_pair(table.all_equal, table_residual(table));
         }},
        {"pseudotensor-invariance",
         [&](TrialRng& rng, const CoeffTensor&) {
             return from_check(pseudo_invariance(rng.invertible_matrix()));
         }},
        {"coordinate-roundtrip",
         [&](TrialRng& rng, const CoeffTensor& f) {
             return from_check(roundtrip_check(f, rng.invertible_matrix()));
         }},
    };

    VerifyReport report;
    std::optional<CoeffTensor> fixed;
    if (options.map) fixed = coeff_tensor(*options.map);

    for (std::size_t li = 0; li < laws.size(); ++li) {
        for (int trial = 0; trial < options.trials; ++trial) {
            const std::uint64_t seed = mix_seed(options.seed, li, static_cast<std::uint64_t>(trial));
            TrialRng rng(seed);
            const CoeffTensor f = fixed ? *fixed : rng.coeff_tensor();
            auto [pass, residual] = laws[li].run(rng, f);
            report.records.push_back({laws[li].name, trial, seed, pass, residual});
            if (!pass) report.all_pass = false;
        }
    }
    return report;
}

std::string VerifyReport::text() const {
    // Aggregate per law, preserving first-appearance order.
    std::vector<std::string> order;
    std::map<std::string, std::pair<int, int>> tally;  // law -> (pass, total)
    for (const auto& rec : records) {
        auto [it, inserted] = tally.try_emplace(rec.law, 0, 0);
        if (inserted) order.push_back(rec.law);
        it->second.second += 1;
        if (rec.pass) it->second.first += 1;
    }

    std::ostringstream os;
    for (const auto& law : order) {
        const auto& [passed, total] = tally.at(law);
        os << law << ": " << passed << "/" << total << " trials pass\n";
    }
    for (const auto& rec : records) {
        if (rec.pass) continue;
        os << "FAIL " << rec.law << " trial " << rec.trial << " seed " << rec.seed;
        if (!rec.residual.empty()) os << " (" << rec.residual << ")";
        os << "\n";
    }
    os << (all_pass ? "all transformation laws hold\n" : "TRANSFORMATION LAW VIOLATIONS FOUND\n");
    return os.str();
}

std::string VerifyReport::to_json_text() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& rec : records) {
        nlohmann::json row;
        row["law"] = rec.law;
        row["trial"] = rec.trial;
        row["seed"] = rec.seed;
        row["pass"] = rec.pass;
        if (!rec.pass) row["residual"] = rec.residual;
        rows.push_back(std::move(row));
    }
    nlohmann::json doc;
    doc["records"] = std::move(rows);
    doc["all_pass"] = all_pass;
    return doc.dump(2) + "\n";
}

}  // namespace cubiq
