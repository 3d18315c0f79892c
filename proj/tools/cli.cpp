#include "cli.hpp"

#include "wzcert/beukers.hpp"
#include "wzcert/errors.hpp"
#include "wzcert/qseries.hpp"
#include "wzcert/summation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace wzcert::cli {

namespace {

using nlohmann::json;

enum class Format { text, json };

struct Config {
    std::int64_t n_max = 10;
    std::int64_t max_prime = 100;
    int max_order = 3;
    std::string summand;
    std::string potential;
    std::int64_t trunc = 20;
    std::optional<Format> format;
    unsigned threads = 1;
};

Format format_or(const Config& cfg, Format fallback) { return cfg.format.value_or(fallback); }

// Runs body(i) for i in [0, count) over `threads` workers.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body body)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += threads)
                body(i);
        });
    for (auto& th : pool)
        th.join();
}

int verify_identity(const Config& cfg, std::ostream& out)
{
    std::vector<Rational> values(static_cast<std::size_t>(cfg.n_max));
    parallel_for(values.size(), cfg.threads, [&](std::size_t i) {
        values[i] = theorem_sum(static_cast<std::int64_t>(i) + 1);
    });
    std::vector<std::int64_t> nonzero;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != 0)
            nonzero.push_back(static_cast<std::int64_t>(i) + 1);
    if (format_or(cfg, Format::text) == Format::json) {
        json j;
        j["n_max"] = cfg.n_max;
        j["all_zero"] = nonzero.empty();
        json vals = json::array();
        for (std::size_t i = 0; i < values.size(); ++i)
            vals.push_back(json::array({static_cast<std::int64_t>(i) + 1, to_string(values[i])}));
        j["values"] = vals;
        out << j.dump(2) << '\n';
    } else {
        out << "n = 1.." << cfg.n_max << ": " << (values.size() - nonzero.size()) << " zero, "
            << nonzero.size() << " nonzero\n";
        for (auto n : nonzero)
            out << "  n = " << n << ": " << to_string(values[static_cast<std::size_t>(n - 1)]) << '\n';
    }
    return nonzero.empty() ? ok : math_false;
}

int find_recurrence(const Config& cfg, std::ostream& out)
{
    if (cfg.summand.empty())
        throw PreconditionError("--summand is required");
    HyperTerm t = parse_term(cfg.summand);
    std::optional<Potential> c;
    if (!cfg.potential.empty())
        c = parse_potential(cfg.potential);
    Telescoped found = c ? zeil_potential(t, *c, cfg.max_order) : zeilberger(t, cfg.max_order);
    bool verified = verify_certificate(t, c, found.recurrence, found.certificate);
    if (format_or(cfg, Format::json) == Format::json) {
        out << to_json(found.recurrence, found.certificate, verified) << '\n';
    } else {
        out << "recurrence: " << to_string(found.recurrence) << '\n';
        out << "R1: " << to_string(found.certificate.r1) << '\n';
        if (found.certificate.r2)
            out << "R2: " << to_string(*found.certificate.r2) << '\n';
        out << "verified: " << (verified ? "true" : "false") << '\n';
    }
    return verified ? ok : math_false;
}

int prove_identity(const Config& cfg, std::ostream& out)
{
    ProofReport report = prove_identity_zero(cfg.max_order);
    if (format_or(cfg, Format::json) == Format::json) {
        out << to_json(report) << '\n';
    } else {
        out << "recurrence: " << to_string(report.recurrence) << '\n';
        out << "certificate verified: " << (report.certificate_verified ? "true" : "false") << '\n';
        out << "leading coefficient nonzero from n = " << report.leading_coeff_nonzero_from << '\n';
        for (const auto& [n, s] : report.base_cases_checked)
            out << "  n = " << n << ": " << to_string(s) << '\n';
        out << "conclusion: " << (report.conclusion ? "true" : "false") << '\n';
    }
    return report.conclusion ? ok : math_false;
}

int check_congruence(const Config& cfg, std::ostream& out)
{
    auto rows = scan_beukers(cfg.max_prime, cfg.threads);
    bool all = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.second; });
    if (format_or(cfg, Format::text) == Format::json) {
        json list = json::array();
        for (const auto& [p, holds] : rows)
            list.push_back(json{{"p", p}, {"holds", holds}});
        out << list.dump(2) << '\n';
    } else {
        for (const auto& [p, holds] : rows)
            if (!holds)
                out << "p = " << p << ": fails\n";
        out << rows.size() << " odd primes <= " << cfg.max_prime << ", "
            << (all ? "all hold" : "some fail") << '\n';
    }
    return all ? ok : math_false;
}

std::string series_text(const Series& s)
{
    std::ostringstream os;
    bool first = true;
    for (std::int64_t i = 0; i <= s.truncation(); ++i) {
        const Integer& c = s[i];
        if (c == 0)
            continue;
        Integer a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (a != 1 || i == 0)
            os << a.get_str() << (i == 0 ? "" : "*");
        if (i == 1)
            os << 'q';
        else if (i > 1)
            os << "q^" << i;
        first = false;
    }
    if (first)
        os << '0';
    os << " + O(q^" << s.truncation() + 1 << ')';
    return os.str();
}

int expand_eta(const Config& cfg, std::ostream& out)
{
    Series s = eta_expand(apery_eta_factors(), 1, cfg.trunc);
    if (format_or(cfg, Format::text) == Format::json) {
        json coeffs = json::array();
        for (const auto& c : s.coeffs())
            coeffs.push_back(c.get_str());
        out << json{{"truncation", cfg.trunc}, {"coeffs", coeffs}}.dump(2) << '\n';
    } else {
        out << series_text(s) << '\n';
    }
    return ok;
}

int gosper_cmd(const Config& cfg, std::ostream& out)
{
    if (cfg.summand.empty())
        throw PreconditionError("--summand is required");
    HyperTerm t = parse_term(cfg.summand);
    auto r = gosper(shift_quotient(t, Var::k));
    if (format_or(cfg, Format::text) == Format::json) {
        json j{{"summable", r.has_value()}};
        j["r"] = r ? json(to_string(*r)) : json(nullptr);
        out << j.dump(2) << '\n';
    } else if (r) {
        out << "summable: R = " << to_string(*r) << '\n';
    } else {
        out << "not summable\n";
    }
    return r ? ok : math_false;
}

int apery_cmd(const Config& cfg, std::ostream& out)
{
    std::vector<Integer> values;
    for (std::int64_t n = 0; n <= cfg.n_max; ++n)
        values.push_back(apery(n));
    if (format_or(cfg, Format::text) == Format::json) {
        json list = json::array();
        for (const auto& v : values)
            list.push_back(v.get_str());
        out << list.dump(2) << '\n';
    } else {
        for (std::size_t n = 0; n < values.size(); ++n)
            out << "A(" << n << ") = " << values[n].get_str() << '\n';
    }
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Creative telescoping certificates and the Apery congruence", "wzcert"};
    app.require_subcommand(1, 1);
    Config cfg;

    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };
    auto add_threads = [&](CLI::App* sub) {
        sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    };

    auto* verify = app.add_subcommand("verify-identity", "Evaluate the harmonic-sum identity for n = 1..N");
    verify->add_option("--n-max", cfg.n_max, "Largest n")->check(CLI::Range(std::int64_t{1}, std::int64_t{100000}));
    add_threads(verify);
    add_format(verify);

    auto* find = app.add_subcommand("find-recurrence", "Creative telescoping for a summand, optionally times a potential");
    find->add_option("--summand", cfg.summand, "Hypergeometric term in n and k")->required();
    find->add_option("--potential", cfg.potential, "Harmonic potential c(n,k)");
    find->add_option("--max-order", cfg.max_order, "Largest recurrence order")->check(CLI::Range(1, 8));
    add_format(find);

    auto* prove = app.add_subcommand("prove-identity", "Recurrence, certificate and base cases for the identity");
    prove->add_option("--max-order", cfg.max_order, "Largest recurrence order")->check(CLI::Range(1, 8));
    add_format(prove);

    auto* congruence = app.add_subcommand("check-congruence", "A((p-1)/2) = a(p) mod p^2 for odd primes p");
    congruence->add_option("--max-prime", cfg.max_prime, "Largest prime")
        ->check(CLI::Range(std::int64_t{3}, std::int64_t{10000000}));
    add_threads(congruence);
    add_format(congruence);

    auto* eta = app.add_subcommand("expand-eta", "Coefficients of q prod (1-q^2j)^4 (1-q^4j)^4");
    eta->add_option("--trunc", cfg.trunc, "Truncation order")->check(CLI::Range(std::int64_t{1}, std::int64_t{10000000}));
    add_format(eta);

    auto* gos = app.add_subcommand("gosper", "Indefinite summation in k");
    gos->add_option("--summand", cfg.summand, "Hypergeometric term")->required();
    add_format(gos);

    auto* ap = app.add_subcommand("apery", "Apery numbers A(0..N)");
    ap->add_option("--n-max", cfg.n_max, "Largest n")->check(CLI::Range(std::int64_t{0}, std::int64_t{100000}));
    add_format(ap);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return usage;
    }

    try {
        if (*verify)
            return verify_identity(cfg, out);
        if (*find)
            return find_recurrence(cfg, out);
        if (*prove)
            return prove_identity(cfg, out);
        if (*congruence)
            return check_congruence(cfg, out);
        if (*eta)
            return expand_eta(cfg, out);
        if (*gos)
            return gosper_cmd(cfg, out);
        return apery_cmd(cfg, out);
    } catch (const NotFoundError& e) {
        err << "not found: " << e.what() << '\n';
        return not_found;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

}  // namespace wzcert::cli
