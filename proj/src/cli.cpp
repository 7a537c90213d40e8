#include "qcum/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcum/count.hpp"
#include "qcum/decide.hpp"
#include "qcum/enumerate.hpp"

namespace qcum::cli {

namespace {

using nlohmann::ordered_json;

struct SelfCheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string decimal(const BigCount& value) { return value.str(); }

ordered_json parts_json(std::span<const Part> parts) { return ordered_json(std::vector<Part>(parts.begin(), parts.end())); }

ordered_json verdict_json(const ExistenceVerdict& verdict) {
    ordered_json maximizers = ordered_json::array();
    for (const MaximizerCheck& m : verdict.checked_maximizers) {
        maximizers.push_back({{"a", m.a}, {"b", m.b}, {"scaled_weight", m.scaled_weight}, {"passed", m.passed}});
    }
    return {{"nonzero", verdict.nonzero},
            {"size_divisible", verdict.size_divisible},
            {"max", verdict.max_residue_count},
            {"maximizers", std::move(maximizers)}};
}

// "(i) pass, (ii) fail: max 4 > 2"
std::string verdict_summary(const ExistenceVerdict& verdict) {
    std::ostringstream line;
    line << "(i) " << (verdict.size_divisible ? "fail" : "pass") << ", (ii) ";
    const auto& checks = verdict.checked_maximizers;
    const auto passing = std::ranges::find_if(checks, &MaximizerCheck::passed);
    if (passing != checks.end()) {
        line << "pass: max " << verdict.max_residue_count << " <= " << passing->scaled_weight;
    } else {
        const auto best = std::ranges::max_element(checks, {}, &MaximizerCheck::scaled_weight);
        line << "fail: max " << verdict.max_residue_count << " > " << best->scaled_weight;
    }
    return line.str();
}

struct OutputRecord {
    Partition partition;
    std::uint64_t modulus = 0;
    BigCount c;
    std::optional<Composition> witness;
    std::optional<ExistenceVerdict> conditions;
};

OutputRecord make_record(const Partition& lambda, std::uint64_t q, std::optional<WCountTable>& table) {
    OutputRecord record{lambda, q, 0, std::nullopt, std::nullopt};
    record.c = table ? c_count(lambda, q, *table) : c_count(lambda, q);
    if (q >= 2 && record.c != 0) record.witness = witness(lambda, q).witness;
    if (is_prime(q)) record.conditions = theorem1_nonzero(lambda, q);

    const bool nonzero = record.c != 0;
    if (nonzero != record.witness.has_value() || (record.conditions && record.conditions->nonzero != nonzero)) {
        throw SelfCheckError("inconsistent record for partition " + to_string(lambda.parts()));
    }
    if (record.witness && !is_cumulative(*record.witness, q)) {
        throw SelfCheckError("witness failed validation for partition " + to_string(lambda.parts()));
    }
    return record;
}

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records) {
    out << "partition;modulus;c;nonzero;witness\n";
    for (const OutputRecord& r : records) {
        out << to_string(r.partition.parts(), ' ') << ';' << r.modulus << ';' << decimal(r.c) << ';'
            << (r.c != 0 ? "true" : "false") << ';' << (r.witness ? to_string(r.witness->parts(), ' ') : "")
            << '\n';
    }
}

void write_json(std::ostream& out, const std::vector<OutputRecord>& records) {
    ordered_json rows = ordered_json::array();
    for (const OutputRecord& r : records) {
        ordered_json row = {{"partition", parts_json(r.partition.parts())},
                            {"modulus", r.modulus},
                            {"c", decimal(r.c)},
                            {"nonzero", r.c != 0},
                            {"witness", r.witness ? parts_json(r.witness->parts()) : ordered_json(nullptr)}};
        row["conditions"] = r.conditions ? verdict_json(*r.conditions) : ordered_json(nullptr);
        rows.push_back(std::move(row));
    }
    out << rows.dump(2) << '\n';
}

struct CheckTally {
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;

    void expect(bool ok, std::ostream& err, const Partition& lambda, std::uint64_t q, std::string_view what) {
        ++checked;
        if (ok) return;
        ++mismatches;
        err << "mismatch: " << what << " for partition " << to_string(lambda.parts()) << " modulus " << q << '\n';
    }
};

void check_partition(const Partition& lambda, std::uint64_t q, CheckTally& tally, std::ostream& err) {
    const BigCount brute = brute_c(lambda, q);
    tally.expect(c_count(lambda, q) == brute, err, lambda, q, "c_count != brute_c");
    if (q >= 2) {
        const WitnessReport report = witness(lambda, q);
        tally.expect(report.exists == (brute > 0), err, lambda, q, "witness existence != (brute_c > 0)");
        if (report.witness) {
            const Partition sorted = Partition::from_unsorted({report.witness->parts().begin(), report.witness->parts().end()});
            tally.expect(sorted == lambda && is_cumulative(*report.witness, q), err, lambda, q,
                         "witness is not a cumulative rearrangement");
        }
    }
    if (is_prime(q)) {
        const bool decided = theorem1_nonzero(lambda, q).nonzero;
        tally.expect(decided == (brute > 0), err, lambda, q, "theorem1_nonzero != (brute_c > 0)");
        tally.expect(!remark_sufficient(lambda, q) || decided, err, lambda, q, "remark_sufficient without nonzero");
    }
}

}  // namespace

Partition parse_partition(std::string_view text, bool sort) {
    std::vector<Part> parts;
    if (!text.empty()) {
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = text.find(',', start);
            const std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
            Part value = 0;
            const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
                throw std::invalid_argument("malformed part '" + std::string(token) + "'");
            }
            if (value < 1) throw std::invalid_argument("parts must be at least 1");
            parts.push_back(value);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    if (sort) return Partition::from_unsorted(std::move(parts));
    if (!std::ranges::is_sorted(parts, std::greater<>{})) {
        throw std::invalid_argument("partition must be weakly decreasing (pass --sort to accept any order)");
    }
    return Partition(std::move(parts));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Count, decide and construct q'-cumulative rearrangements of partitions", "qcum"};
    app.require_subcommand(1);

    std::string partition_text;
    bool sort = false;
    std::uint64_t modulus = 0;
    std::string format;

    auto add_partition = [&](CLI::App* sub) {
        sub->add_option("--partition", partition_text, "Comma-separated parts, e.g. 3,1,1")->required();
        sub->add_flag("--sort", sort, "Accept parts in any order");
    };

    CLI::App* count = app.add_subcommand("count", "Print c^(q) of a partition");
    add_partition(count);
    count->add_option("--modulus", modulus, "Modulus q >= 1")->required();
    count->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json"}))->default_val("plain");

    CLI::App* exists = app.add_subcommand("exists", "Decide whether c^(p) is nonzero for a prime p");
    add_partition(exists);
    exists->add_option("--prime", modulus, "Prime modulus p")->required();
    exists->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json"}))->default_val("plain");

    CLI::App* wit = app.add_subcommand("witness", "Print one cumulative rearrangement or 'none'");
    add_partition(wit);
    wit->add_option("--modulus", modulus, "Modulus q >= 2")->required();
    wit->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json"}))->default_val("plain");

    CLI::App* enumerate = app.add_subcommand("enumerate", "List every cumulative rearrangement");
    add_partition(enumerate);
    enumerate->add_option("--modulus", modulus, "Modulus q >= 1")->required();

    std::uint64_t n = 0;
    CLI::App* sweep = app.add_subcommand("sweep", "One record per partition of n");
    sweep->add_option("--n", n, "Size of the partitions")->required();
    sweep->add_option("--modulus", modulus, "Modulus q >= 1")->required();
    sweep->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->default_val("csv");

    std::uint64_t max_n = 10;
    std::vector<std::uint64_t> moduli{2, 3, 4, 5, 6, 7};
    bool primes_only = false;
    CLI::App* check = app.add_subcommand("check", "Cross-validate against brute-force enumeration");
    check->add_option("--max-n", max_n, "Largest partition size")->capture_default_str();
    check->add_option("--moduli", moduli, "Comma-separated moduli")->delimiter(',')->capture_default_str();
    check->add_flag("--primes-only", primes_only, "Only use prime moduli");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (*count) {
            const Partition lambda = parse_partition(partition_text, sort);
            if (modulus < 1) throw std::invalid_argument("modulus must be at least 1");
            const BigCount c = c_count(lambda, modulus);
            if (format == "json") {
                out << ordered_json{{"partition", parts_json(lambda.parts())}, {"modulus", modulus}, {"c", decimal(c)}}.dump()
                    << '\n';
            } else {
                out << decimal(c) << '\n';
            }
            return kSuccess;
        }

        if (*exists) {
            const Partition lambda = parse_partition(partition_text, sort);
            const ExistenceVerdict verdict = theorem1_nonzero(lambda, modulus);
            if (format == "json") {
                ordered_json body = {{"partition", parts_json(lambda.parts())}, {"prime", modulus}};
                body.update(verdict_json(verdict));
                out << body.dump() << '\n';
            } else {
                out << (verdict.nonzero ? "true" : "false") << '\n' << verdict_summary(verdict) << '\n';
                for (const MaximizerCheck& m : verdict.checked_maximizers) {
                    out << "maximizer a=" << m.a << " b=" << m.b << " weight=" << m.scaled_weight << ' '
                        << (m.passed ? "pass" : "fail") << '\n';
                }
            }
            return verdict.nonzero ? kSuccess : kNegative;
        }

        if (*wit) {
            const Partition lambda = parse_partition(partition_text, sort);
            const WitnessReport report = witness(lambda, modulus);
            if (format == "json") {
                out << ordered_json{{"partition", parts_json(lambda.parts())},
                                    {"modulus", modulus},
                                    {"witness", report.witness ? parts_json(report.witness->parts()) : ordered_json(nullptr)},
                                    {"method", to_string(report.method)}}
                           .dump()
                    << '\n';
            } else {
                out << (report.witness ? to_string(report.witness->parts()) : std::string("none")) << '\n';
            }
            return report.exists ? kSuccess : kNegative;
        }

        if (*enumerate) {
            const Partition lambda = parse_partition(partition_text, sort);
            if (modulus < 1) throw std::invalid_argument("modulus must be at least 1");
            for (const Composition& delta : cumulative_rearrangements(lambda, modulus)) {
                out << to_string(delta.parts()) << '\n';
            }
            return kSuccess;
        }

        if (*sweep) {
            if (modulus < 1) throw std::invalid_argument("modulus must be at least 1");
            std::optional<WCountTable> table;
            if (modulus >= 2) table.emplace(modulus);
            std::vector<OutputRecord> records;
            for (const Partition& lambda : partitions_of(n)) records.push_back(make_record(lambda, modulus, table));
            if (format == "json") {
                write_json(out, records);
            } else {
                write_csv(out, records);
            }
            return kSuccess;
        }

        if (*check) {
            CheckTally tally;
            for (std::uint64_t q : moduli) {
                if (q < 1) throw std::invalid_argument("moduli must be at least 1");
            }
            for (std::uint64_t size = 0; size <= max_n; ++size) {
                for (const Partition& lambda : partitions_of(size)) {
                    for (std::uint64_t q : moduli) {
                        if (primes_only && !is_prime(q)) continue;
                        check_partition(lambda, q, tally, err);
                    }
                }
            }
            out << "checked=" << tally.checked << " mismatches=" << tally.mismatches << '\n';
            return tally.mismatches == 0 ? kSuccess : kSelfCheckFailed;
        }
    } catch (const SelfCheckError& e) {
        err << "self-check failed: " << e.what() << '\n';
        return kSelfCheckFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kSelfCheckFailed;
    }
    return kUsageError;
}

}  // namespace qcum::cli
