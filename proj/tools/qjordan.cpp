// Command-line front end: compute F_lambda, tabulate, enumerate placements,
// apply the bijections, run the brute-force census, and verify identities.

#include "qjordan/bij.hpp"
#include "qjordan/jordan.hpp"
#include "qjordan/oracle.hpp"
#include "qjordan/partition.hpp"
#include "qjordan/poly.hpp"
#include "qjordan/rook.hpp"
#include "qjordan/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

using namespace qjordan;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void print_csv_row(const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << csv_field(fields[i]);
    }
    std::cout << "\n";
}

int run_flambda(const std::string& lambda_text, const std::string& format) {
    const Partition lambda = parse_partition(lambda_text);
    const Poly f = f_lambda(lambda);
    const int degree = f.is_zero() ? 0 : *f.degree();
    const auto fac = extract_qminus1(f);
    if (format == "json") {
        ordered_json j;
        j["lambda"] = to_string(lambda);
        j["expanded"] = to_string(f);
        j["factored"] = to_factored_string(f);
        j["degree"] = degree;
        j["leading_coefficient"] = f.leading_coeff().str();
        j["qminus1_multiplicity"] = fac.multiplicity;
        j["n_lambda"] = n_lambda(lambda);
        j["num_tableaux"] = num_syt(lambda).str();
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        print_csv_row({"lambda", "expanded", "factored", "degree", "leading_coefficient",
                       "qminus1_multiplicity", "n_lambda", "num_tableaux"});
        print_csv_row({to_string(lambda), to_string(f), to_factored_string(f),
                       std::to_string(degree), f.leading_coeff().str(),
                       std::to_string(fac.multiplicity), std::to_string(n_lambda(lambda)),
                       num_syt(lambda).str()});
    } else {
        std::cout << "lambda:                " << to_string(lambda) << "\n"
                  << "F (expanded):          " << to_string(f) << "\n"
                  << "F (factored):          " << to_factored_string(f) << "\n"
                  << "degree:                " << degree << "\n"
                  << "leading coefficient:   " << f.leading_coeff().str() << "\n"
                  << "(q-1) multiplicity:    " << fac.multiplicity << "\n"
                  << "n_lambda:              " << n_lambda(lambda) << "\n"
                  << "standard tableaux:     " << num_syt(lambda).str() << "\n";
    }
    return 0;
}

int run_table(int n, const std::string& format) {
    ordered_json rows = ordered_json::array();
    for (const auto& lam : partitions_of(n)) {
        const Poly f = f_lambda(lam);
        ordered_json row;
        row["lambda"] = to_string(lam);
        row["factored"] = to_factored_string(f);
        row["degree"] = f.is_zero() ? 0 : *f.degree();
        row["num_tableaux"] = num_syt(lam).str();
        row["num_placements"] = placements_of_type(lam).size();
        rows.push_back(std::move(row));
    }
    if (format == "json") {
        ordered_json j;
        j["n"] = n;
        j["rows"] = std::move(rows);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        print_csv_row({"lambda", "factored", "degree", "num_tableaux", "num_placements"});
        for (const auto& row : rows)
            print_csv_row({row["lambda"], row["factored"],
                           std::to_string(row["degree"].get<int>()), row["num_tableaux"],
                           std::to_string(row["num_placements"].get<size_t>())});
    } else {
        for (const auto& row : rows)
            std::cout << row["lambda"].get<std::string>() << "  |  "
                      << row["factored"].get<std::string>()
                      << "  |  deg " << row["degree"].get<int>() << "  |  tableaux "
                      << row["num_tableaux"].get<std::string>() << "  |  placements "
                      << row["num_placements"].get<size_t>() << "\n";
    }
    return 0;
}

int run_rook(int n, int k, const std::string& format) {
    const auto board = FerrersBoard::staircase(n);
    const Poly r = q_rook_poly(board, k);
    const Poly s = q_stirling(n, n - k);
    const Poly p = p_rank_count(board, k);
    if (format == "json") {
        ordered_json j;
        j["n"] = n;
        j["k"] = k;
        j["rook_polynomial"] = to_string(r);
        j["q_stirling"] = to_string(s);
        j["rank_count"] = to_string(p);
        j["rank_count_factored"] = to_factored_string(p);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        print_csv_row({"n", "k", "rook_polynomial", "q_stirling", "rank_count"});
        print_csv_row({std::to_string(n), std::to_string(k), to_string(r), to_string(s),
                       to_string(p)});
    } else {
        std::cout << "R (rook polynomial):   " << to_string(r) << "\n"
                  << "S (q-Stirling):        " << to_string(s) << "\n"
                  << "P (rank count):        " << to_factored_string(p) << "\n";
    }
    if (r != s) {
        std::cerr << "rook polynomial and q-Stirling value disagree\n";
        return kExitVerifyFailure;
    }
    return 0;
}

int run_placements(const std::string& lambda_text, const std::string& format) {
    const Partition lambda = parse_partition(lambda_text);
    const auto placements = placements_of_type(lambda);
    ordered_json rows = ordered_json::array();
    for (const auto& C : placements) {
        ordered_json row;
        row["placement"] = to_string(C);
        row["weight"] = to_factored_string(placement_weight(C));
        row["set_partition"] = to_string(psi(C));
        rows.push_back(std::move(row));
    }
    if (format == "json") {
        ordered_json j;
        j["lambda"] = to_string(lambda);
        j["placements"] = std::move(rows);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        print_csv_row({"placement", "weight", "set_partition"});
        for (const auto& row : rows)
            print_csv_row({row["placement"], row["weight"], row["set_partition"]});
    } else {
        for (const auto& row : rows)
            std::cout << row["placement"].get<std::string>() << "  |  "
                      << row["weight"].get<std::string>() << "  |  "
                      << row["set_partition"].get<std::string>() << "\n";
    }
    return 0;
}

int run_biject(const std::string& which, const std::string& input, int n, bool inverse,
               const std::string& format) {
    auto board_size = [&](const std::string& text) {
        if (n > 0) return n;
        int max_col = 0;
        const auto C = parse_placement(text, 100);
        for (const auto& r : C.rooks()) max_col = std::max(max_col, r.col);
        if (max_col == 0)
            throw std::invalid_argument("empty placement needs an explicit --n");
        return max_col;
    };
    if (which == "phi" && !inverse) {
        const auto C = parse_placement(input, board_size(input));
        const auto path = phi(C);
        ordered_json chain = ordered_json::array();
        for (const auto& e : path.edges) {
            ordered_json step;
            step["partition"] = to_string(e.target);
            step["weight"] = to_string(e.weight);
            chain.push_back(std::move(step));
        }
        if (format == "json") {
            ordered_json j;
            j["placement"] = to_string(C);
            j["chain"] = std::move(chain);
            j["type"] = to_string(path.endpoint());
            j["weight"] = to_factored_string(path.weight());
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& step : chain)
                std::cout << step["partition"].get<std::string>() << "  (weight "
                          << step["weight"].get<std::string>() << ")\n";
            std::cout << "type:   " << to_string(path.endpoint()) << "\n"
                      << "weight: " << to_factored_string(path.weight()) << "\n";
        }
        return 0;
    }
    std::string result;
    if (which == "phi") {
        // inverse from a comma-separated degree sequence
        std::vector<int> degrees;
        std::stringstream ss(input);
        std::string item;
        while (std::getline(ss, item, ',')) degrees.push_back(std::stoi(item));
        result = to_string(phi_inverse(path_from_degrees(degrees)));
    } else if (which == "psi" && inverse) {
        result = to_string(psi_inverse(parse_set_partition(input)));
    } else if (which == "psi") {
        result = to_string(psi(parse_placement(input, board_size(input))));
    } else if (which == "classical" && !inverse) {
        result = to_string(classical_bijection(parse_placement(input, board_size(input))));
    } else {
        throw CLI::ValidationError("biject", "unsupported map/direction combination");
    }
    if (format == "json") {
        ordered_json j;
        j["map"] = which + (inverse ? "-inverse" : "");
        j["input"] = input;
        j["output"] = result;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << result << "\n";
    }
    return 0;
}

int run_oracle(int n, int p, uint64_t budget, const std::string& format) {
    const auto c = census(n, p, budget);
    bool all_match = true;
    ordered_json counts = ordered_json::object();
    ordered_json rows = ordered_json::array();
    for (const auto& [lam, count] : c.counts) {
        counts[to_string(lam)] = count;
        const Int expect = f_lambda(lam).eval(p);
        const bool match = Int(count) == expect;
        all_match &= match;
        ordered_json row;
        row["lambda"] = to_string(lam);
        row["count"] = count;
        row["formula_value"] = expect.str();
        row["match"] = match;
        rows.push_back(std::move(row));
    }
    if (format == "json") {
        ordered_json j;
        j["n"] = c.n;
        j["p"] = c.p;
        j["counts"] = std::move(counts);
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        print_csv_row({"lambda", "count", "formula_value", "match"});
        for (const auto& row : rows)
            print_csv_row({row["lambda"], std::to_string(row["count"].get<uint64_t>()),
                           row["formula_value"], row["match"].get<bool>() ? "true" : "false"});
    } else {
        for (const auto& row : rows)
            std::cout << row["lambda"].get<std::string>() << "  count "
                      << row["count"].get<uint64_t>() << "  formula "
                      << row["formula_value"].get<std::string>() << "  "
                      << (row["match"].get<bool>() ? "ok" : "MISMATCH") << "\n";
    }
    return all_match ? 0 : kExitVerifyFailure;
}

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

int run_verify(int n_max, const std::vector<int>& primes, const std::string& format) {
    std::vector<Check> checks;
    auto add = [&](const std::string& name, auto body) {
        Check c{name, false, ""};
        try {
            c.detail = body();
            c.pass = c.detail.empty();
        } catch (const std::exception& e) {
            c.detail = e.what();
        }
        checks.push_back(std::move(c));
    };

    add("tableau sum equals recurrence", [&]() -> std::string {
        for (int n = 0; n <= n_max; ++n)
            for (const auto& lam : partitions_of(n))
                if (f_lambda_syt(lam) != f_lambda(lam)) return "lambda=" + to_string(lam);
        return "";
    });
    add("closed forms equal recurrence", [&]() -> std::string {
        for (int n = 1; n <= n_max; ++n) {
            if (f_lambda(Partition({n})) !=
                Poly::q_minus_one().pow(n - 1) * Poly::q_power(choose2(n - 1)))
                return "one row n=" + std::to_string(n);
            for (int k = 2; k < n; ++k) {
                std::vector<int> hook{n - k + 1};
                hook.insert(hook.end(), static_cast<size_t>(k - 1), 1);
                if (f_hook(n, k) != f_lambda(Partition{hook}))
                    return "hook (" + std::to_string(n) + "," + std::to_string(k) + ")";
            }
            for (int s = 1; 2 * s <= n; ++s)
                if (f_two_rows(n - s, s) != f_lambda(Partition({n - s, s})))
                    return "two rows (" + std::to_string(n - s) + "," + std::to_string(s) + ")";
            for (int r = 0; 2 * r <= n; ++r) {
                std::vector<int> parts(static_cast<size_t>(r), 2);
                parts.insert(parts.end(), static_cast<size_t>(n - 2 * r), 1);
                if (parts.empty()) continue;
                if (f_two_columns(r, n - 2 * r) != f_lambda(Partition{parts}))
                    return "two columns (" + std::to_string(r) + "," +
                           std::to_string(n - 2 * r) + ")";
            }
        }
        return "";
    });
    add("degree, leading coefficient, multiplicity laws", [&]() -> std::string {
        for (int n = 1; n <= n_max; ++n)
            for (const auto& lam : partitions_of(n)) {
                const Poly f = f_lambda(lam);
                if (*f.degree() != choose2(n) - n_lambda(lam) ||
                    f.leading_coeff() != num_syt(lam) ||
                    extract_qminus1(f).multiplicity != n - lam.length())
                    return "lambda=" + to_string(lam);
            }
        return "";
    });
    add("q-Stirling equals staircase rook polynomial", [&]() -> std::string {
        for (int n = 1; n <= n_max; ++n)
            for (int k = 1; k <= n; ++k)
                if (q_stirling(n, k) != q_rook_poly(FerrersBoard::staircase(n), n - k))
                    return "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
        return "";
    });
    add("rank counts by both routes", [&]() -> std::string {
        for (int n = 1; n <= n_max; ++n)
            for (int k = 0; k < n; ++k)
                p_rank_count(FerrersBoard::staircase(n), k);  // throws on disagreement
        return "";
    });
    add("rank counts refine into F by number of parts", [&]() -> std::string {
        for (int n = 1; n <= n_max; ++n)
            for (int k = 0; k < n; ++k) {
                Poly sum;
                for (const auto& lam : partitions_of(n, n - k)) sum += f_lambda(lam);
                if (p_rank_count(FerrersBoard::staircase(n), k) != sum)
                    return "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
            }
        return "";
    });
    add("bijections preserve weight and invert", [&]() -> std::string {
        for (int n = 1; n <= n_max; ++n) {
            const auto bn = FerrersBoard::staircase(n);
            for (int k = 0; k < n; ++k)
                for (const auto& C : enumerate_placements(bn, k)) {
                    const auto path = phi(C);
                    const auto S = psi(C);
                    if (path.weight() != placement_weight(C) || phi_inverse(path) != C ||
                        set_partition_weight(S) != placement_weight(C) || psi_inverse(S) != C)
                        return "placement " + to_string(C);
                }
        }
        return "";
    });
    add("Catalan coefficient identity", [&]() -> std::string {
        for (int k = 0; k <= n_max; ++k)
            if (!catalan_coefficient_identity(k).equal) return "k=" + std::to_string(k);
        return "";
    });
    add("brute-force censuses", [&]() -> std::string {
        for (int p : primes) {
            const int limit = p == 2 ? std::min(n_max, 6) : std::min(n_max, 5);
            for (int n = 1; n <= limit; ++n) {
                const auto c = census(n, p);
                for (const auto& lam : partitions_of(n)) {
                    const uint64_t got = c.counts.contains(lam) ? c.counts.at(lam) : 0;
                    if (Int(got) != f_lambda(lam).eval(p))
                        return "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                               " lambda=" + to_string(lam);
                }
            }
        }
        return "";
    });

    int failed = 0;
    for (const auto& c : checks)
        if (!c.pass) ++failed;
    if (format == "json") {
        ordered_json j;
        j["n_max"] = n_max;
        j["primes"] = primes;
        ordered_json rows = ordered_json::array();
        for (const auto& c : checks) {
            ordered_json row;
            row["name"] = c.name;
            row["status"] = c.pass ? "pass" : "fail";
            if (!c.detail.empty()) row["detail"] = c.detail;
            rows.push_back(std::move(row));
        }
        j["checks"] = std::move(rows);
        j["failed"] = failed;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        print_csv_row({"name", "status", "detail"});
        for (const auto& c : checks)
            print_csv_row({c.name, c.pass ? "pass" : "fail", c.detail});
    } else {
        for (const auto& c : checks) {
            std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name;
            if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
            std::cout << "\n";
        }
        std::cout << checks.size() - static_cast<size_t>(failed) << "/" << checks.size()
                  << " checks passed\n";
    }
    return failed == 0 ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jordan-type counts of upper-triangular nilpotent matrices over F_q"};
    app.require_subcommand(1);
    app.fallthrough();  // --format may follow the subcommand

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    std::string lambda_text, input, which;
    int n = 0, k = 0, p = 2, n_max = 5;
    bool inverse = false;
    uint64_t budget = 100000000ULL;
    std::vector<int> primes{2, 3};

    auto* flambda = app.add_subcommand("flambda", "compute F_lambda and its statistics");
    flambda->add_option("lambda", lambda_text, "partition, e.g. 3,1")->required();

    auto* table = app.add_subcommand("table", "tabulate all partitions of n");
    table->add_option("n", n, "size")->required()->check(CLI::NonNegativeNumber);

    auto* rook = app.add_subcommand("rook", "rook polynomial, q-Stirling and rank-count values");
    rook->add_option("n", n, "staircase size")->required()->check(CLI::PositiveNumber);
    rook->add_option("k", k, "number of rooks")->required()->check(CLI::NonNegativeNumber);

    auto* placements = app.add_subcommand("placements", "list the placements of a given type");
    placements->add_option("lambda", lambda_text, "partition")->required();

    auto* biject = app.add_subcommand("biject", "apply a bijection");
    biject->add_option("map", which, "phi, psi or classical")
        ->required()
        ->check(CLI::IsMember({"phi", "psi", "classical"}));
    biject->add_option("input", input, "placement, set partition or degree sequence")
        ->required();
    biject->add_option("--n", n, "board size (needed for empty or padded placements)");
    biject->add_flag("--inverse", inverse, "apply the inverse map");

    auto* oracle = app.add_subcommand("oracle", "brute-force census over F_p");
    oracle->add_option("n", n, "matrix size")->required()->check(CLI::NonNegativeNumber);
    oracle->add_option("p", p, "prime, one of 2, 3, 5")->required();
    oracle->add_option("--budget", budget, "enumeration budget")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run every identity suite");
    verify->add_option("--n-max", n_max, "largest n")->capture_default_str();
    verify->add_option("--primes", primes, "census primes")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(flambda)) return run_flambda(lambda_text, format);
        if (app.got_subcommand(table)) return run_table(n, format);
        if (app.got_subcommand(rook)) return run_rook(n, k, format);
        if (app.got_subcommand(placements)) return run_placements(lambda_text, format);
        if (app.got_subcommand(biject)) return run_biject(which, input, n, inverse, format);
        if (app.got_subcommand(oracle)) return run_oracle(n, p, budget, format);
        if (app.got_subcommand(verify)) return run_verify(n_max, primes, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return kExitUsage;
}
