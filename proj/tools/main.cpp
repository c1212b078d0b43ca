// nilpair: exact canonical forms for commuting nilpotent matrix pairs
// (A, B) with A similar to J_m + J_n, m > n, under simultaneous
// similarity; plus exhaustive orbit certification over small GF(p).
//
// Exit codes: 0 success / similar-or-not printed; 1 violations or
// oracle disagreement; 2 malformed input or bad arguments;
// 3 precondition violation; 4 internal verification failure;
// 5 enumeration budget exceeded.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nilpair/io.hpp"

namespace {

using namespace nilpair;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;
constexpr int kExitBudget = 5;

// Deterministic 64-bit PRNG (splitmix64); the standard distributions
// are implementation-defined, this is reproducible everywhere.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

Scalar random_scalar(Rng& rng, const FieldSpec& spec) {
    if (spec.is_rationals())
        return Scalar::of_fraction(rng.range(-9, 9), rng.range(1, 9), spec);
    return Scalar::of_int(rng.range(0, static_cast<long>(spec.modulus() - 1)), spec);
}

Scalar random_nonzero_scalar(Rng& rng, const FieldSpec& spec) {
    for (;;) {
        Scalar v = random_scalar(rng, spec);
        if (!v.is_zero()) return v;
    }
}

// Random short form already in reduced shape for the requested
// rank and branch: zeros below the leading pair, d matching a up to it.
ShortForm random_reduced_short_form(Rng& rng, const FieldSpec& spec, std::size_t m, std::size_t n,
                                    std::size_t r, bool c_branch) {
    std::size_t k = n - r;
    std::vector<Scalar> a(m, Scalar::zero(spec)), b(n, Scalar::zero(spec)),
        c(n, Scalar::zero(spec)), d(n, Scalar::zero(spec));
    for (std::size_t i = 1; i < m; ++i) a[i] = random_scalar(rng, spec);
    for (std::size_t i = 1; i <= k; ++i) d[i] = a[i];
    for (std::size_t i = k + 1; i < n; ++i) d[i] = random_scalar(rng, spec);
    for (std::size_t i = k + 1; i < n; ++i) {
        b[i] = random_scalar(rng, spec);
        c[i] = random_scalar(rng, spec);
    }
    if (c_branch) {
        c[k] = random_nonzero_scalar(rng, spec);
        b[k] = random_scalar(rng, spec);
    } else {
        b[k] = random_nonzero_scalar(rng, spec);
    }
    return ShortForm(m, n, std::move(a), std::move(b), std::move(c), std::move(d));
}

void write_output(const json& doc, const std::string& out_path) {
    std::string text = doc.dump(2);
    text += "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out.is_open()) throw ParseError("cannot open " + out_path + " for writing");
    out << text;
}

int cmd_canon(const std::string& pair_path, const std::string& out_path) {
    PairFile pair = read_pair_file(pair_path);
    CanonResult result = canonicalize_pair(pair.a, pair.b);
    JordanType type = jordan_type(pair.a);
    write_output(canon_result_to_json(result, pair.field, type.parts()[0], type.parts()[1]),
                 out_path);
    return kExitOk;
}

int cmd_similar(const std::string& pair1_path, const std::string& pair2_path) {
    PairFile pair1 = read_pair_file(pair1_path);
    PairFile pair2 = read_pair_file(pair2_path);
    auto witness = pairs_similar(pair1.a, pair1.b, pair2.a, pair2.b);
    if (!witness) {
        std::cout << "NOT-SIMILAR\n";
        return kExitOk;
    }
    std::cout << "SIMILAR\n";
    json doc;
    doc["field"] = pair1.field.str();
    doc["witness"] = matrix_to_json(*witness);
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_certify(std::size_t m, std::size_t n, std::uint64_t p, std::uint64_t budget,
                unsigned workers, bool audit, const std::string& out_path) {
    try {
        FieldSpec::prime_field(p);
        if (!(m > n && n >= 1)) throw ShapeError("block sizes need m > n >= 1");
    } catch (const Error& e) {
        throw ParseError(e.what()); // bad arguments
    }
    {
        // budget arithmetic, printed before any heavy work
        std::size_t digits = m + 3 * n - 2;
        std::cerr << "enumeration size p^(m+3n-2) = " << p << "^" << digits
                  << ", budget = " << budget << "\n";
    }
    OrbitOptions options;
    options.budget = budget;
    options.workers = workers;
    options.audit = audit;
    OrbitReport report = certify_classification(m, n, p, options);
    write_output(orbit_report_to_json(report), out_path);
    return report.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_selftest(std::uint64_t samples, std::uint64_t seed, const std::string& out_path) {
    std::ostringstream out;
    std::uint64_t checked = 0, failures = 0;
    const std::size_t m = 6, n = 4;
    std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime_field(7)};
    Rng rng(seed);

    for (const FieldSpec& spec : fields) {
        for (std::size_t r = 1; r <= 4; ++r) {
            for (int branch = 0; branch < 2; ++branch) {
                std::uint64_t agreed = 0;
                for (std::uint64_t i = 0; i < samples; ++i) {
                    ShortForm sf = random_reduced_short_form(rng, spec, m, n, r, branch == 0);
                    ShortForm expected = closed_form_m6n4(sf);
                    CanonResult got = canonical_form(sf);
                    ++checked;
                    if (got.canonical && *got.canonical == expected) {
                        ++agreed;
                    } else {
                        ++failures;
                        out << "DISAGREE field=" << spec.str() << " rank=" << r
                            << " branch=" << (branch == 0 ? "c" : "b") << " input=" << sf.str()
                            << " closed_form=" << expected.str() << " canonical_form="
                            << (got.canonical ? got.canonical->str() : "Decomposable") << "\n";
                    }
                }
                out << "field=" << spec.str() << " rank=" << r
                    << " branch=" << (branch == 0 ? "c" : "b") << " agreed=" << agreed << "/"
                    << samples << "\n";
            }
        }
    }
    out << checked << " checked, " << failures << " failures\n";

    if (out_path.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(out_path);
        if (!f.is_open()) throw ParseError("cannot open " + out_path + " for writing");
        f << out.str();
    }
    return failures == 0 ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact canonical forms for commuting nilpotent matrix pairs"};
    app.require_subcommand(1);

    std::string pair_path, pair1_path, pair2_path, out_path;
    std::size_t m = 3, n = 2;
    std::uint64_t p = 2;
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
    bool audit = false;
    std::uint64_t samples = 1000, seed = 42;

    CLI::App* canon = app.add_subcommand("canon", "Canonicalize a pair from a JSON file");
    canon->add_option("--pair", pair_path, "input pair file")->required();
    canon->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* similar = app.add_subcommand("similar", "Test two pairs for simultaneous similarity");
    similar->add_option("--pair1", pair1_path, "first pair file")->required();
    similar->add_option("--pair2", pair2_path, "second pair file")->required();

    CLI::App* certify =
        app.add_subcommand("certify", "Exhaustively certify the classification over GF(p)");
    certify->add_option("--m", m, "larger block size")->required();
    certify->add_option("--n", n, "smaller block size")->required();
    certify->add_option("--p", p, "field characteristic (prime)")->required();
    certify->add_option("--budget", budget, "enumeration budget (default 16777216)");
    certify->add_option("--workers", workers, "worker threads (default 1)");
    certify->add_flag("--audit", audit, "verify closure against the full stabilizer group");
    certify->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* selftest =
        app.add_subcommand("selftest", "Check canonical_form against the m=6, n=4 closed forms");
    selftest->add_option("--samples", samples, "samples per rank/branch/field (default 1000)");
    selftest->add_option("--seed", seed, "PRNG seed (default 42)");
    selftest->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitMalformed;
    }

    try {
        if (app.got_subcommand(canon)) return cmd_canon(pair_path, out_path);
        if (app.got_subcommand(similar)) return cmd_similar(pair1_path, pair2_path);
        if (app.got_subcommand(certify))
            return cmd_certify(m, n, p, budget, workers, audit, out_path);
        if (app.got_subcommand(selftest)) return cmd_selftest(samples, seed, out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const VerificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const Error& e) {
        // preconditions: non-commuting, non-nilpotent, wrong Jordan
        // type, field/shape mismatches, decomposable where forbidden
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitMalformed;
}
