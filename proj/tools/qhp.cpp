#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhp/brute_oracle.hpp"
#include "qhp/closed_forms.hpp"
#include "qhp/form_counts.hpp"
#include "qhp/general_kpotent.hpp"
#include "qhp/quaternion.hpp"
#include "qhp/report.hpp"

namespace {

using nlohmann::json;
using namespace qhp;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

void require_odd_prime(i64 p) {
    if (!is_odd_prime(p)) {
        throw NotPrime("p = " + std::to_string(p) + " must be an odd prime");
    }
}

json census_json(const CensusResult& row) {
    json obj{{"p", row.p}, {"count", row.count}, {"method", method_name(row.method)}};
    if (row.k) obj["k"] = *row.k;
    return obj;
}

struct CountArgs {
    i64 p = 0;
    i64 k = 0;
    std::string method = "general";
    std::string format = "text";
};

int run_count(const CountArgs& args) {
    require_odd_prime(args.p);
    CensusResult row{args.p, "kpotent", args.k, 0, Method::General};
    if (args.method == "closed") {
        row.method = Method::ClosedForm;
        row.count = closed_kpotent_count(args.p, args.k);
    } else if (args.method == "general") {
        row.count = count_kpotent(args.p, args.k);
    } else if (args.method == "paper") {
        row.method = Method::PaperLiteral;
        row.count = literal_kpotent_count(args.p, args.k).with_scalars;
    } else if (args.method == "brute") {
        row.method = Method::Oracle;
        row.count = oracle_count_kpotent(args.p, args.k);
    }
    if (args.format == "json") {
        std::cout << census_json(row).dump() << "\n";
    } else {
        std::cout << "p=" << row.p << " k=" << args.k << " method="
                  << method_name(row.method) << " count=" << row.count << "\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    i64 p = 0;
    i64 k_max = 5;
    bool no_brute = false;
    std::string format = "text";
};

int run_verify(const VerifyArgs& args) {
    require_odd_prime(args.p);
    VerificationOptions opts;
    opts.include_brute = !args.no_brute;
    auto records = run_verification(args.p, args.k_max, opts);
    if (args.format == "json") {
        json out = json::array();
        for (const auto& rec : records) {
            json values = json::object();
            for (const auto& [name, value] : rec.values) values[name] = value;
            out.push_back(json{{"p", rec.p},
                               {"k", rec.k},
                               {"values", values},
                               {"agree", rec.agree},
                               {"notes", rec.notes}});
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& rec : records) {
            std::cout << "p=" << rec.p << " k=" << rec.k;
            for (const auto& [name, value] : rec.values) {
                std::cout << " " << name << "=" << value;
            }
            std::cout << " agree=" << (rec.agree ? "yes" : "no") << "\n";
            for (const auto& note : rec.notes) {
                std::cout << "  note: " << note << "\n";
            }
        }
    }
    return all_agree(records) ? kExitOk : kExitMismatch;
}

struct RootsArgs {
    i64 p = 0;
    i64 k = 0;
    std::string format = "text";
};

int run_roots(const RootsArgs& args) {
    require_odd_prime(args.p);
    RootCountResult direct = count_roots(args.p, args.k);
    i64 via_divisors = divisor_sum_root_count(args.p, args.k);
    std::string breakdown;
    for (const auto& [d, count] : direct.per_divisor) {
        if (!breakdown.empty()) breakdown += "+";
        breakdown += std::to_string(count);
    }
    if (args.format == "json") {
        json per = json::object();
        for (const auto& [d, count] : direct.per_divisor) {
            per[std::to_string(d)] = count;
        }
        std::cout << json{{"p", args.p},
                          {"k", args.k},
                          {"count", direct.total},
                          {"divisor_sum", via_divisors},
                          {"per_divisor", per},
                          {"agree", direct.total == via_divisors}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "p=" << args.p << " k=" << args.k << " count=" << direct.total
                  << " divisor-sum=" << via_divisors << " breakdown=" << breakdown
                  << "\n";
        for (const auto& [d, count] : direct.per_divisor) {
            std::cout << "  d=" << d << " count=" << count << "\n";
        }
    }
    return direct.total == via_divisors ? kExitOk : kExitMismatch;
}

struct TableArgs {
    std::string p_list;
    i64 k_max = 5;
    std::string format = "text";
};

int run_table(const TableArgs& args) {
    std::vector<i64> primes;
    std::stringstream in(args.p_list);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty()) continue;
        i64 p = std::stoll(part);
        require_odd_prime(p);
        primes.push_back(p);
    }
    auto rows = census_table(primes, args.k_max);
    if (args.format == "json") {
        json out = json::array();
        for (const auto& row : rows) out.push_back(census_json(row));
        std::cout << out.dump() << "\n";
    } else if (args.format == "csv") {
        std::cout << "p,k,count,method\n";
        for (const auto& row : rows) {
            std::cout << row.p << "," << *row.k << "," << row.count << ","
                      << method_name(row.method) << "\n";
        }
    } else {
        for (const auto& row : rows) {
            std::cout << "p=" << row.p << " k=" << *row.k << " count=" << row.count
                      << " method=" << method_name(row.method) << "\n";
        }
    }
    return kExitOk;
}

struct ClassifyArgs {
    i64 p = 0;
    std::string literal;
};

int run_classify(const ClassifyArgs& args) {
    require_odd_prime(args.p);
    auto parsed = parse_quaternion(args.literal, args.p);
    if (!parsed) {
        std::cerr << "cannot parse quaternion literal \"" << args.literal
                  << "\" (expected c0,c1,c2,c3)\n";
        return kExitUsage;
    }
    const Quaternion& q = *parsed;
    Fp t = q.trace();
    Fp n = q.norm();
    std::cout << "q=" << to_string(q) << " p=" << args.p << "\n";
    std::cout << "trace=" << t.value() << " norm=" << n.value() << "\n";
    std::cout << "zero-divisor=" << (is_zero_divisor(q) ? "yes" : "no")
              << " nilpotent=" << ((is_nilpotent(q) && !q.is_zero()) ? "yes" : "no")
              << "\n";
    PotencyClass cls = potency_index(q, default_potency_cap(args.p));
    switch (cls.kind) {
        case PotencyKind::Potent:
            std::cout << "potent index=" << cls.index << "\n";
            break;
        case PotencyKind::Nilpotent:
            std::cout << "potency-index=none (nilpotent, index 2 with q^2=0)\n";
            break;
        case PotencyKind::NoIndexWithinCap:
            std::cout << "potency-index=none within cap\n";
            break;
    }
    std::cout << "class=(t=" << t.value() << ", n=" << n.value() << ") ";
    if (t.is_zero() && n.is_zero()) {
        std::cout << "nilpotent class\n";
    } else {
        CharPair pair{t, n};
        Fp disc = pair.discriminant();
        if (disc.is_zero()) {
            std::cout << "ramified\n";
        } else {
            std::cout << (legendre(disc) == Legendre::Residue ? "split" : "inert")
                      << "\n";
        }
    }
    return kExitOk;
}

struct SpectrumArgs {
    i64 p = 0;
    i64 cap = 0;  // 0 means default p^2 + 1
};

int run_spectrum(const SpectrumArgs& args) {
    require_odd_prime(args.p);
    i64 cap = args.cap > 0 ? args.cap : args.p * args.p + 1;
    SpectrumTable table = oracle_spectrum(args.p, cap);
    std::cout << "p=" << table.p << " cap=" << table.cap << "\n";
    std::cout << "nilpotent-nonzero=" << table.nilpotent_nonzero << "\n";
    for (const auto& [k, count] : table.by_index) {
        std::cout << "k=" << k << " count=" << count << "\n";
    }
    std::cout << "overflow=" << table.overflow << "\n";
    std::cout << "total=" << table.total() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-potent censuses and root counts in the quaternion algebra over Z_p"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* cmd_count = app.add_subcommand("count", "count k-potent elements");
    cmd_count->add_option("--p", count_args.p, "odd prime modulus")->required();
    cmd_count->add_option("--k", count_args.k, "potency index")->required();
    cmd_count->add_option("--method", count_args.method, "closed|general|paper|brute")
        ->check(CLI::IsMember({"closed", "general", "paper", "brute"}));
    cmd_count->add_option("--format", count_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    VerifyArgs verify_args;
    auto* cmd_verify = app.add_subcommand("verify", "cross-check all methods");
    cmd_verify->add_option("--p", verify_args.p, "odd prime modulus")->required();
    cmd_verify->add_option("--k-max", verify_args.k_max, "largest potency index");
    cmd_verify->add_flag("--no-brute", verify_args.no_brute, "skip the enumeration oracle");
    cmd_verify->add_option("--format", verify_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    RootsArgs roots_args;
    auto* cmd_roots = app.add_subcommand("roots", "count solutions of x^k = 1");
    cmd_roots->add_option("--p", roots_args.p, "odd prime modulus")->required();
    cmd_roots->add_option("--k", roots_args.k, "exponent")->required();
    cmd_roots->add_option("--format", roots_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    TableArgs table_args;
    auto* cmd_table = app.add_subcommand("table", "census table over several primes");
    cmd_table->add_option("--p-list", table_args.p_list, "comma-separated odd primes");
    cmd_table->add_option("--k-max", table_args.k_max, "largest potency index");
    cmd_table->add_option("--format", table_args.format, "csv|json|text")
        ->check(CLI::IsMember({"csv", "json", "text"}));

    ClassifyArgs classify_args;
    auto* cmd_classify = app.add_subcommand("classify", "classify one quaternion");
    cmd_classify->add_option("--p", classify_args.p, "odd prime modulus")->required();
    cmd_classify->add_option("--q", classify_args.literal, "quaternion literal c0,c1,c2,c3")
        ->required();

    SpectrumArgs spectrum_args;
    auto* cmd_spectrum = app.add_subcommand("spectrum", "full potency spectrum by enumeration");
    cmd_spectrum->add_option("--p", spectrum_args.p, "odd prime modulus")->required();
    cmd_spectrum->add_option("--cap", spectrum_args.cap, "search cap (default p^2+1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_count->parsed()) return run_count(count_args);
        if (cmd_verify->parsed()) return run_verify(verify_args);
        if (cmd_roots->parsed()) return run_roots(roots_args);
        if (cmd_table->parsed()) return run_table(table_args);
        if (cmd_classify->parsed()) return run_classify(classify_args);
        if (cmd_spectrum->parsed()) return run_spectrum(spectrum_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
