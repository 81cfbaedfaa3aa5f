#include "kpoisson/cli/commands.hpp"

#include <iomanip>
#include <sstream>

#include "CLI11.hpp"

#include "kpoisson/errors.hpp"
#include "kpoisson/moments.hpp"
#include "kpoisson/oracles.hpp"
#include "kpoisson/partitions.hpp"

namespace kpoisson::cli {

namespace {

using json = nlohmann::ordered_json;

// Beyond this many multiplicity vectors a pmf table takes minutes.
constexpr std::int64_t kMaxPmfVectors = 5'000'000;

std::vector<std::string> coeff_strings(const IntPoly& p, std::size_t min_len = 0) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs())
        out.push_back(c.to_string());
    while (out.size() < min_len)
        out.emplace_back("0");
    return out;
}

BigRational parse_lambda(const std::string& text, bool require_positive) {
    BigRational lam = BigRational::parse(text);
    if (lam.sign() < 0 || (require_positive && lam.is_zero()))
        throw DomainError(std::string("lambda must be ") + (require_positive ? "positive" : "nonnegative") +
                          ", got " + text);
    return lam;
}

void require_order(int k) {
    if (k < 1)
        throw PreconditionError("--k must be at least 1");
}

} // namespace

CommandOutput cmd_moment(const MomentArgs& args) {
    require_order(args.k);
    if (args.n < 0)
        throw DomainError("--n must be nonnegative");
    const LambdaPoly poly = factorial_moment_poly(args.n, OrderParams(args.k));

    OutputRecord r;
    r.kind = RecordKind::moment;
    r.k = args.k;
    r.n = args.n;
    r.coeffs = coeff_strings(poly);
    if (args.lambda) {
        const BigRational lam = parse_lambda(*args.lambda, false);
        const BigRational value = poly.eval(lam);
        r.lambda = lam.to_string();
        r.value = args.exact ? value.to_string() : format_double(value.to_double());
    }
    return {{std::move(r)}, kExitOk};
}

CommandOutput cmd_pmf(const PmfArgs& args) {
    require_order(args.k);
    if (args.n_max < 0)
        throw DomainError("--n-max must be nonnegative");
    const BigRational lam = parse_lambda(args.lambda, true);
    const BigInt vectors = count_weighted(static_cast<std::uint32_t>(args.n_max), static_cast<std::uint32_t>(args.k));
    if (vectors > BigInt(kMaxPmfVectors))
        throw NotSupported("pmf table for k=" + std::to_string(args.k) + " up to n=" + std::to_string(args.n_max) +
                           " needs " + vectors.to_string() + " multiplicity vectors per row; reduce --n-max");

    const OrderParams params(args.k);
    const double lam_d = lam.to_double();
    CommandOutput out;
    long double cumulative = 0.0L;
    for (int n = 0; n <= args.n_max; ++n) {
        const PmfValue p = pmf(n, params, lam);
        const double value = p.numeric(lam_d);
        cumulative += value;
        OutputRecord r;
        r.kind = RecordKind::pmf;
        r.k = args.k;
        r.n = n;
        r.lambda = lam.to_string();
        r.coeffs = coeff_strings(p.weight);
        r.value = format_double(value);
        json status;
        status["denom"] = p.denom.to_string();
        status["cumulative"] = format_double(static_cast<double>(cumulative));
        r.status = std::move(status);
        out.records.push_back(std::move(r));
    }
    return out;
}

CommandOutput cmd_coeff(const CoeffArgs& args) {
    require_order(args.k);
    const OrderParams params(args.k);
    const BigInt closed = coeff_closed_form(args.n, params, args.power);
    const LambdaPoly poly = factorial_moment_poly(args.n, params);
    const BigInt extracted = poly.coeff(static_cast<std::size_t>(args.power));
    const bool match = closed == extracted;

    OutputRecord r;
    r.kind = RecordKind::coeff;
    r.k = args.k;
    r.n = args.n;
    r.value = closed.to_string();
    json status;
    status["power"] = args.power;
    status["closed_form"] = closed.to_string();
    status["extracted"] = extracted.to_string();
    status["match"] = match;
    r.status = std::move(status);
    return {{std::move(r)}, match ? kExitOk : kExitMismatch};
}

CommandOutput cmd_verify(const VerifyOptions& args) {
    const VerifyReport report = run_verification(args);

    OutputRecord r;
    r.kind = RecordKind::verify;
    r.k = args.k_max;
    r.n = args.n_max;
    r.value = report.passed() ? "pass" : "fail";
    json status;
    status["passed"] = report.passed();
    status["checks"] = report.total_checks();
    status["failures"] = report.total_failures();
    status["seed"] = args.seed ? json(*args.seed) : json(nullptr);
    json families = json::array();
    for (const auto& f : report.families)
        families.push_back(json{{"name", f.name}, {"checks", f.checks}, {"failures", f.failures}});
    status["families"] = std::move(families);
    if (report.first_failure) {
        const auto& c = *report.first_failure;
        status["counterexample"] =
            json{{"check", c.check}, {"k", c.k}, {"n", c.n}, {"expected", c.expected}, {"actual", c.actual}};
    } else {
        status["counterexample"] = nullptr;
    }
    r.status = std::move(status);
    return {{std::move(r)}, report.passed() ? kExitOk : kExitMismatch};
}

CommandOutput cmd_sample(const SampleArgs& args) {
    require_order(args.k);
    if (args.n_max < 1)
        throw DomainError("--n-max must be at least 1");
    const BigRational lam = parse_lambda(args.lambda, true);
    const OrderParams params(args.k);
    const SampleSummary s = sample_moments(params, lam.to_double(), args.n_max, args.trials, args.seed, args.workers);

    CommandOutput out;
    for (int n = 1; n <= args.n_max; ++n) {
        const auto i = static_cast<std::size_t>(n - 1);
        const BigRational exact = factorial_moment_poly(n, params).eval(lam);
        const double exact_d = exact.to_double();
        const auto estimate = static_cast<double>(s.estimates[i]);
        const auto se = static_cast<double>(s.std_errors[i]);
        OutputRecord r;
        r.kind = RecordKind::sample;
        r.k = args.k;
        r.n = n;
        r.lambda = lam.to_string();
        r.value = format_double(estimate);
        json status;
        status["exact"] = exact.to_string();
        status["std_error"] = format_double(se);
        status["z"] = se > 0.0 ? json(format_double((estimate - exact_d) / se)) : json(nullptr);
        status["trials"] = s.trials;
        status["seed"] = s.seed;
        r.status = std::move(status);
        out.records.push_back(std::move(r));
    }
    return out;
}

void render_text(std::ostream& out, const std::vector<OutputRecord>& records) {
    bool pmf_header = false;
    bool sample_header = false;
    for (const auto& r : records) {
        switch (r.kind) {
        case RecordKind::moment: {
            std::vector<BigInt> c;
            for (const auto& s : r.coeffs.value())
                c.push_back(BigInt::parse(s));
            out << "M_(" << r.n << ")(k=" << r.k << ", L) = " << IntPoly(std::move(c)).to_string() << '\n';
            out << "coeffs (L^0..L^" << r.n << "):";
            for (const auto& s : r.coeffs.value())
                out << ' ' << s;
            out << '\n';
            if (r.value)
                out << "M_(" << r.n << ")(k=" << r.k << ", L=" << *r.lambda << ") = " << *r.value << '\n';
            break;
        }
        case RecordKind::pmf:
            if (!pmf_header) {
                out << "# k=" << r.k << " lambda=" << r.lambda.value_or("") << "\n"
                    << "n\tP_n\tcumulative\n";
                pmf_header = true;
            }
            out << r.n << '\t' << r.value.value_or("") << '\t'
                << r.status.value().at("cumulative").get<std::string>() << '\n';
            break;
        case RecordKind::coeff: {
            const auto& s = r.status.value();
            out << "[L^" << s.at("power").get<int>() << "] M_(" << r.n << ")(k=" << r.k << "): closed form "
                << s.at("closed_form").get<std::string>() << ", extracted " << s.at("extracted").get<std::string>()
                << ", " << (s.at("match").get<bool>() ? "match" : "MISMATCH") << '\n';
            break;
        }
        case RecordKind::verify: {
            const auto& s = r.status.value();
            out << "verify k<=" << r.k << " n<=" << r.n << ": " << (s.at("passed").get<bool>() ? "PASS" : "FAIL")
                << " (" << s.at("checks").get<std::uint64_t>() << " checks, "
                << s.at("failures").get<std::uint64_t>() << " failures)\n";
            for (const auto& f : s.at("families")) {
                if (f.at("checks").get<std::uint64_t>() == 0)
                    continue;
                out << "  " << std::left << std::setw(20) << f.at("name").get<std::string>() << std::right
                    << std::setw(8) << f.at("checks").get<std::uint64_t>() << " checks" << std::setw(6)
                    << f.at("failures").get<std::uint64_t>() << " failures\n";
            }
            if (const auto& c = s.at("counterexample"); !c.is_null()) {
                out << "first counterexample: " << c.at("check").get<std::string>() << " at k=" << c.at("k").get<int>()
                    << ", n=" << c.at("n").get<int>() << '\n'
                    << "  expected: " << c.at("expected").get<std::string>() << '\n'
                    << "  actual:   " << c.at("actual").get<std::string>() << '\n';
            }
            break;
        }
        case RecordKind::sample: {
            const auto& s = r.status.value();
            if (!sample_header) {
                out << "# k=" << r.k << " lambda=" << r.lambda.value_or("")
                    << " trials=" << s.at("trials").get<std::uint64_t>() << " seed=" << s.at("seed").get<std::uint64_t>()
                    << "\n"
                    << "n\testimate\texact\tstd_error\tz\n";
                sample_header = true;
            }
            out << r.n << '\t' << r.value.value_or("") << '\t' << s.at("exact").get<std::string>() << '\t'
                << s.at("std_error").get<std::string>() << '\t'
                << (s.at("z").is_null() ? std::string("nan") : s.at("z").get<std::string>()) << '\n';
            break;
        }
        }
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact moment polynomials, PMF tables and cross-checks for the order-k Poisson law"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    };

    MomentArgs moment;
    auto* moment_cmd = app.add_subcommand("moment", "Factorial moment M_(n)(k, lambda) as a polynomial or value");
    moment_cmd->add_option("--k", moment.k, "Order k >= 1")->required()->check(CLI::PositiveNumber);
    moment_cmd->add_option("--n", moment.n, "Moment index n >= 0")->required()->check(CLI::NonNegativeNumber);
    moment_cmd->add_option("--lambda", moment.lambda, "Rate as p/q or decimal; evaluates the polynomial");
    moment_cmd->add_flag("--exact", moment.exact, "Print the value as an exact rational");
    add_format(moment_cmd);

    PmfArgs pmf_args;
    auto* pmf_cmd = app.add_subcommand("pmf", "Probability mass function table P_0..P_{n_max}");
    pmf_cmd->add_option("--k", pmf_args.k, "Order k >= 1")->required()->check(CLI::PositiveNumber);
    pmf_cmd->add_option("--lambda", pmf_args.lambda, "Rate > 0 as p/q or decimal")->required();
    pmf_cmd->add_option("--n-max", pmf_args.n_max, "Last row")->required()->check(CLI::NonNegativeNumber);
    add_format(pmf_cmd);

    CoeffArgs coeff;
    auto* coeff_cmd = app.add_subcommand("coeff", "Closed-form coefficient of lambda^power vs. the extracted one");
    coeff_cmd->add_option("--k", coeff.k, "Order k >= 1")->required()->check(CLI::PositiveNumber);
    coeff_cmd->add_option("--n", coeff.n, "Moment index")->required();
    coeff_cmd->add_option("--power", coeff.power, "One of n, n-1, n-2, n-3, 1")->required();
    add_format(coeff_cmd);

    VerifyOptions verify;
    std::optional<std::uint64_t> verify_seed;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check every formula over a (k, n) grid");
    verify_cmd->add_option("--k-max", verify.k_max, "Largest order")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--n-max", verify.n_max, "Largest moment index")->required()->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", verify_seed, "Also run a Monte Carlo check with this seed");
    verify_cmd->add_option("--workers", verify.workers, "Threads (0 = all cores)");
    verify_cmd->add_flag("--inject-kappa-fault", verify.corrupt_kappa, "Test hook: corrupt kappa_1")
        ->group(""); // hidden
    add_format(verify_cmd);

    SampleArgs sample;
    auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo estimates of M_(1)..M_(n_max)");
    sample_cmd->add_option("--k", sample.k, "Order k >= 1")->required()->check(CLI::PositiveNumber);
    sample_cmd->add_option("--lambda", sample.lambda, "Rate in (0, 30] as p/q or decimal")->required();
    sample_cmd->add_option("--trials", sample.trials, "Number of draws")->required()->check(CLI::PositiveNumber);
    sample_cmd->add_option("--n-max", sample.n_max, "Highest moment index")->required()->check(CLI::PositiveNumber);
    sample_cmd->add_option("--seed", sample.seed, "RNG seed")->required();
    sample_cmd->add_option("--workers", sample.workers, "Threads (0 = all cores); output does not depend on it");
    add_format(sample_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    CommandOutput result;
    try {
        if (*moment_cmd)
            result = cmd_moment(moment);
        else if (*pmf_cmd)
            result = cmd_pmf(pmf_args);
        else if (*coeff_cmd)
            result = cmd_coeff(coeff);
        else if (*verify_cmd) {
            verify.seed = verify_seed;
            result = cmd_verify(verify);
        } else
            result = cmd_sample(sample);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NotSupported& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const Format fmt = parse_format(format);
    if (fmt == Format::text)
        render_text(out, result.records);
    else
        write_records(out, result.records, fmt);
    return result.exit_code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("kpoisson");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace kpoisson::cli
