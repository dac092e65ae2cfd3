#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "faf/errors.hpp"
#include "faf/lattice.hpp"
#include "faf/serialize.hpp"

namespace faf::cli {

namespace {

enum class Output { json, text, dot };

struct RunConfig {
    unsigned precision = 128;
    std::size_t depth = 50;
    BigRational tol{1, 10000000000};
    Output output = Output::json;
};

struct UsageError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad JSON in " + what + ": " + e.what());
    }
}

Mat2Z parse_mobius(const std::string& text) {
    std::vector<BigInt> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_integer(item));
    if (v.size() != 4) throw ParseError("--mobius takes a,b,c,d");
    return Mat2Z{v[0], v[1], v[2], v[3]};
}

// Top-level keys as "key: compact-json" lines.
void write_text(std::ostream& out, const Json& doc) {
    for (const auto& [key, value] : doc.items()) {
        if (key == "v") continue;
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

void emit(std::ostream& out, const RunConfig& cfg, const Json& doc, const BratteliDiagram* diagram = nullptr) {
    switch (cfg.output) {
        case Output::json: out << doc.dump(2) << '\n'; return;
        case Output::text: write_text(out, doc); return;
        case Output::dot:
            if (!diagram) throw UsageError("--output dot is only available for diagram commands");
            out << export_dot(*diagram);
            return;
    }
}

Json document(const std::string& command) { return Json{{"v", 1}, {"command", command}}; }

struct DigitSource {
    std::string digits;
    std::string digits_file;
    std::size_t n = 0;

    bool given() const { return !digits.empty() || !digits_file.empty(); }

    JPExpansion load() const {
        if (!digits.empty() && !digits_file.empty()) throw UsageError("give --digits or --digits-file, not both");
        const std::string text = digits.empty() ? read_file(digits_file) : digits;
        std::vector<JPDigit> ds = digits_from_json(parse_json(text, digits.empty() ? digits_file : "--digits"));
        std::size_t dim = n;
        if (dim == 0) {
            if (ds.empty()) throw UsageError("an empty digit list needs --n");
            dim = ds[0].size() + 1;
        }
        return JPExpansion::from_digits(dim, std::move(ds));
    }
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool nested);

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return run(args, out, err, false);
}

namespace {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool nested) {
    RunConfig cfg;
    if (const char* env = std::getenv("FOLIATION_AF_PRECISION")) {
        try {
            cfg.precision = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            err << "error: FOLIATION_AF_PRECISION is not a number\n";
            return kUsage;
        }
    }

    CLI::App app{"Continued fractions, Jacobi-Perron expansions and Bratteli diagrams", "foliation-af"};
    app.fallthrough();
    app.require_subcommand(1);
    std::string tol_text = "1/10000000000";
    std::string output_text = "json";
    app.add_option("--precision", cfg.precision, "working precision in bits")->check(CLI::Range(8u, 1u << 20));
    app.add_option("--depth", cfg.depth, "expansion depth")->check(CLI::PositiveNumber);
    app.add_option("--tol", tol_text, "convergence tolerance as p/q");
    app.add_option("--output", output_text, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));

    CLI::App* cf = app.add_subcommand("cf", "regular continued fraction of a scalar");
    std::string cf_value, poly, embed, coords;
    cf->add_option("value", cf_value, "scalar: p/q, alg(poly;lo,hi[;coords]) or JSON");
    cf->add_option("--poly", poly, "minimal polynomial, e.g. x^2-2");
    cf->add_option("--embed", embed, "isolating interval lo,hi");
    cf->add_option("--coords", coords, "power-basis coordinates c0,c1,...");

    CLI::App* jp = app.add_subcommand("jp", "Jacobi-Perron expansion of a vector");
    std::vector<std::string> jp_theta;
    DigitSource jp_digits;
    std::string perron_c, tail_bound;
    bool es_check = false;
    jp->add_option("theta", jp_theta, "theta_1 ... theta_{n-1}");
    jp->add_option("--digits", jp_digits.digits, "digits as JSON [[b1,...],...]");
    jp->add_option("--digits-file", jp_digits.digits_file, "file holding digits as JSON");
    jp->add_option("--n", jp_digits.n, "dimension for an empty digit list");
    jp->add_option("--check-perron", perron_c, "check Perron's condition with constant C");
    jp->add_flag("--check-es-divergence", es_check, "test the (beta_k, 0) divergence criterion");
    jp->add_option("--tail-bound", tail_bound, "rational bound on the remaining sum of 1/beta_k");

    CLI::App* af = app.add_subcommand("af", "AF-algebra commands");
    af->require_subcommand(1);

    CLI::App* build = af->add_subcommand("build", "Bratteli diagram from digits or a scalar");
    DigitSource build_digits;
    std::string build_cf;
    bool dot = false;
    build->add_option("--digits", build_digits.digits, "digits as JSON [[b1,...],...]");
    build->add_option("--digits-file", build_digits.digits_file, "file holding digits as JSON");
    build->add_option("--n", build_digits.n, "dimension for an empty digit list");
    build->add_option("--cf", build_cf, "Effros-Shen diagram of this scalar");
    build->add_flag("--dot", dot, "emit graphviz text");

    CLI::App* trace = af->add_subcommand("trace", "unique-trace estimate of a diagram");
    DigitSource trace_digits;
    std::string trace_cf;
    std::size_t level = 0;
    trace->add_option("--digits", trace_digits.digits, "digits as JSON [[b1,...],...]");
    trace->add_option("--digits-file", trace_digits.digits_file, "file holding digits as JSON");
    trace->add_option("--cf", trace_cf, "Effros-Shen diagram of this scalar");
    trace->add_option("--level", level, "level (default: deepest)");

    CLI::App* compare = af->add_subcommand("compare", "stable isomorphism of two Effros-Shen algebras");
    std::vector<std::string> cmp_values;
    std::string cmp_poly, cmp_embed, cmp_coords, mobius;
    std::size_t max_offset = 40;
    bool require_proof = false;
    compare->add_option("values", cmp_values, "theta and theta'")->expected(0, 2);
    compare->add_option("--poly", cmp_poly, "minimal polynomial of theta");
    compare->add_option("--embed", cmp_embed, "isolating interval lo,hi");
    compare->add_option("--coords", cmp_coords, "power-basis coordinates of theta");
    compare->add_option("--mobius", mobius, "theta' = (a theta + b)/(c theta + d), given as a,b,c,d");
    compare->add_option("--max-offset", max_offset, "largest tail offset searched");
    compare->add_flag("--require-proof", require_proof, "exit 3 unless the verdict is proven");

    CLI::App* functor = af->add_subcommand("functor", "pseudo-lattice to toric AF-algebra");
    long genus = 0;
    std::vector<RealScalar> lambda;
    functor->add_option("--genus", genus, "genus g >= 1")->required();
    functor
        ->add_option_function<std::string>(
            "--lambda", [&](const std::string& s) { lambda.push_back(parse_scalar(s)); }, "period as a scalar")
        ->trigger_on_parse();
    functor
        ->add_option_function<std::string>(
            "--lambda-poly",
            [&](const std::string& s) {
                const auto first = s.find(',');
                if (first == std::string::npos) throw ParseError("--lambda-poly takes poly,lo,hi");
                lambda.push_back(algebraic_scalar(s.substr(0, first), s.substr(first + 1), ""));
            },
            "period as the root of poly in [lo,hi], given as poly,lo,hi")
        ->trigger_on_parse();

    CLI::App* batch = app.add_subcommand("batch", "run newline-delimited JSON argument arrays");
    std::string batch_file;
    batch->add_option("file", batch_file, "file of JSON arrays, one invocation per line")->required();

    try {
        try {
            std::vector<std::string> rev(args.rbegin(), args.rend());
            app.parse(rev);
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return kOk;
        } catch (const CLI::CallForAllHelp&) {
            out << app.help("", CLI::AppFormatMode::All);
            return kOk;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << '\n';
            return kUsage;
        }

        cfg.tol = parse_rational(tol_text);
        if (cfg.tol <= 0) throw UsageError("--tol must be positive");
        cfg.output = output_text == "text" ? Output::text : output_text == "dot" ? Output::dot : Output::json;
        if (dot) cfg.output = Output::dot;

        if (cf->parsed()) {
            if (cf_value.empty() == poly.empty()) throw UsageError("cf takes a scalar or --poly/--embed");
            const RealScalar x = cf_value.empty() ? algebraic_scalar(poly, embed, coords) : parse_scalar(cf_value);
            const CFExpansion e = cf_expand(x, cfg.depth);
            Json convergents = Json::array();
            Mat2Z m;
            for (const BigInt& b : e.digits) {
                m = m * Mat2Z{0, 1, 1, b};
                convergents.push_back(to_string(BigRational(m.d, m.b)));
            }
            Json doc = document("cf");
            doc["input"] = to_json(x);
            doc["depth"] = cfg.depth;
            doc["expansion"] = to_json(e);
            doc["convergents"] = convergents;
            doc["periodic"] = e.period.has_value();
            emit(out, cfg, doc);
            return kOk;
        }

        if (jp->parsed()) {
            if (jp_digits.given() == !jp_theta.empty()) throw UsageError("jp takes theta values or --digits/--digits-file");
            std::vector<RealScalar> theta;
            for (const std::string& s : jp_theta) theta.push_back(parse_scalar(s));
            const JPExpansion e = jp_digits.given() ? jp_digits.load() : jp_expand(theta, cfg.depth);

            std::optional<BigRational> tail;
            if (!tail_bound.empty()) tail = parse_rational(tail_bound);
            std::optional<JPLimitReport> limit;
            if (!e.digits.empty())
                limit = jp_limit_check(e, theta.empty() ? nullptr : &theta, e.digits.size(), cfg.tol, cfg.precision);

            Json doc = document("jp");
            if (!theta.empty()) {
                Json in = Json::array();
                for (const RealScalar& t : theta) in.push_back(to_json(t));
                doc["input"] = in;
            }
            doc["depth"] = cfg.depth;
            doc["expansion"] = to_json(e);
            doc["convergence"] = to_json(certify_convergence(e, limit, es_check ? tail : std::nullopt));
            if (!perron_c.empty()) {
                const BigRational c = parse_rational(perron_c);
                if (c <= 0) throw UsageError("--check-perron needs C > 0");
                doc["perron"] = to_json(perron_condition(e, c));
                doc["perron"]["C"] = to_string(c);
            }
            if (es_check) doc["es_divergence"] = to_json(effros_shen_divergent(e, tail));
            if (e.n == 2 && !theta.empty()) doc["regular_cf"] = to_json(cf_expand(theta[0], cfg.depth));
            emit(out, cfg, doc);
            return kOk;
        }

        if (build->parsed() || trace->parsed()) {
            DigitSource& src = build->parsed() ? build_digits : trace_digits;
            const std::string& scalar = build->parsed() ? build_cf : trace_cf;
            if (src.given() == !scalar.empty()) throw UsageError("give digits or --cf");
            const BratteliDiagram d = src.given() ? diagram_from_digits(src.load())
                                                  : effros_shen_diagram(cf_expand(parse_scalar(scalar), cfg.depth), cfg.depth);
            if (build->parsed()) {
                Json doc = document("af build");
                doc["diagram"] = to_json(d);
                Json dims = Json::array();
                for (const IntVector& v : dimension_vectors(d, d.levels())) dims.push_back(to_json(v));
                doc["dimension_vectors"] = dims;
                emit(out, cfg, doc, &d);
            } else {
                if (cfg.output == Output::dot) throw UsageError("--output dot is only available for diagram commands");
                const std::size_t k = level == 0 ? d.levels() : level;
                Json doc = document("af trace");
                doc["trace"] = to_json(unique_trace_estimate(d, k, cfg.precision));
                emit(out, cfg, doc);
            }
            return kOk;
        }

        if (compare->parsed()) {
            std::optional<RealScalar> theta, theta2;
            std::size_t next = 0;
            if (!cmp_poly.empty())
                theta = algebraic_scalar(cmp_poly, cmp_embed, cmp_coords);
            else if (next < cmp_values.size())
                theta = parse_scalar(cmp_values[next++]);
            if (!theta) throw UsageError("compare needs theta");
            TailReport report;
            Json doc = document("af compare");
            doc["theta"] = to_json(*theta);
            if (!mobius.empty()) {
                if (next != cmp_values.size()) throw UsageError("give theta' or --mobius, not both");
                const Mat2Z m = parse_mobius(mobius);
                doc["mobius"] = Json::array({integer_json(m.a), integer_json(m.b), integer_json(m.c), integer_json(m.d)});
                report = observation_check(*theta, m, cfg.depth, max_offset);
            } else {
                if (next + 1 != cmp_values.size()) throw UsageError("compare needs theta'");
                theta2 = parse_scalar(cmp_values[next]);
                doc["theta_prime"] = to_json(*theta2);
                report = cf_tail_equivalent(*theta, *theta2, cfg.depth, max_offset);
            }
            const Json fields = to_json(report);
            for (const auto& [key, value] : fields.items()) doc[key] = value;
            emit(out, cfg, doc);
            if (require_proof && !report.proven) {
                err << "error: verdict is limited to depth " << report.depth << " and --require-proof was given\n";
                return kProofRequired;
            }
            return kOk;
        }

        if (functor->parsed()) {
            const FunctorBundle b = functor_map(PseudoLattice(lambda), genus, cfg.depth, cfg.tol, cfg.precision);
            Json doc = document("af functor");
            doc["genus"] = genus;
            Json lam = Json::array();
            for (const RealScalar& x : lambda) lam.push_back(to_json(x));
            doc["lambda"] = lam;
            const Json fields = to_json(b);
            for (const auto& [key, value] : fields.items()) doc[key] = value;
            emit(out, cfg, doc, &b.diagram);
            return kOk;
        }

        if (batch->parsed()) {
            if (nested) throw UsageError("batch files cannot run batch");
            std::istringstream lines(read_file(batch_file));
            std::string line;
            int worst = kOk;
            while (std::getline(lines, line)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                const Json argv = parse_json(line, batch_file);
                if (!argv.is_array()) throw ParseError("each batch line must be a JSON array of strings");
                std::vector<std::string> sub;
                for (const Json& a : argv) {
                    if (!a.is_string()) throw ParseError("each batch line must be a JSON array of strings");
                    sub.push_back(a.get<std::string>());
                }
                worst = std::max(worst, run(sub, out, err, true));
            }
            return worst;
        }
    } catch (const Indeterminate& e) {
        err << "error: indeterminate: " << e.what() << '\n';
        return kIndeterminate;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace

}  // namespace faf::cli
