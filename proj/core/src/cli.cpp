#include "ringlab/cli.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ringlab/classify.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/parallel.hpp"
#include "ringlab/report.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab::cli {

namespace {

struct GlobalOpts {
    bool json = false;
    std::size_t max_size = 4096;
    unsigned threads = 1;
};

std::vector<std::string> read_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SemanticError("cannot open corpus file " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(begin, end - begin + 1));
    }
    return lines;
}

int cmd_classify(const GlobalOpts& g, const std::string& expr_text,
                 const std::string& corpus, std::ostream& out) {
    const ReportOptions ropts{g.json};
    if (!corpus.empty()) {
        const auto lines = read_corpus(corpus);
        std::vector<ClassificationReport> reports(lines.size());
        std::vector<std::exception_ptr> errors(lines.size());
        parallel_for(lines.size(), g.threads, [&](std::size_t i) {
            try {
                const auto ast = parse_ring_expr(lines[i]);
                const auto el = elaborate(*ast, {g.max_size});
                reports[i] = el.integers ? classify_integers() : classify(el.ring, {1});
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
        out << render_classification_batch(reports, ropts);
        return 0;
    }
    const auto ast = parse_ring_expr(expr_text);
    const auto el = elaborate(*ast, {g.max_size});
    const auto report =
        el.integers ? classify_integers() : classify(el.ring, {g.threads});
    out << render_classification(report, ropts);
    return 0;
}

FactorMode mode_from(const std::string& mode) {
    if (mode == "isp" || mode == "strong") return FactorMode::InvRadical;
    if (mode == "sp" || mode == "ssp") return FactorMode::RadicalsOnly;
    if (mode == "zpi") return FactorMode::PrimesOnly;
    if (mode == "zpui") return FactorMode::InvPrimes;
    throw SemanticError("unknown factor mode " + mode);
}

int cmd_factor(const GlobalOpts& g, const std::string& expr_text,
               const std::string& ideal_text, const std::string& mode,
               std::ostream& out) {
    const ReportOptions ropts{g.json};
    const auto ast = parse_ring_expr(expr_text);
    const auto inst = parse_instance_expr(ideal_text);
    const auto* ideal_expr = std::get_if<IdealExpr>(&inst);
    if (!ideal_expr)
        throw SemanticError("the second factor argument must be an ideal(...) literal");
    const auto el = elaborate(*ast, {g.max_size});
    if (el.integers) {
        const std::uint64_t n = elaborate_integer_ideal(*ideal_expr);
        ints::IntFactorization f;
        if (mode == "isp" || mode == "strong") {
            f = ints::int_factor_isp(n);
        } else if (mode == "sp" || mode == "ssp") {
            f = {1, ints::int_factor_sp(n)};
        } else {
            if (n == 1) throw SemanticError("the unit ideal (1) is not a factorization target");
            if (n == 0) {
                f = {1, {0}};
            } else {
                f.invertible = 1;
                for (const auto& [p, e] : ints::prime_factorization(n))
                    for (unsigned i = 0; i < e; ++i) f.parts.push_back(p);
            }
        }
        out << render_int_factorization(n, mode, f, ropts);
        return 0;
    }
    const Ideal target = elaborate_ideal(*ideal_expr, el.ring);
    const auto result = factor_ideal(target, mode_from(mode));
    out << render_factorization(el.ring, target, mode, result, ropts);
    return result ? 0 : 1;
}

TheoremInstance build_instance(const GlobalOpts& g, const std::vector<std::string>& args) {
    TheoremInstance inst;
    std::vector<RingPtr> rings;
    for (const auto& text : args) {
        const auto parsed = parse_instance_expr(text);
        if (const auto* ring_expr = std::get_if<RingExprPtr>(&parsed)) {
            const auto el = elaborate(**ring_expr, {g.max_size});
            if (el.integers)
                throw SemanticError("theorem checks need finite ring instances, not Zint");
            rings.push_back(el.ring);
        } else if (const auto* ideal_expr = std::get_if<IdealExpr>(&parsed)) {
            if (rings.empty())
                throw SemanticError("an ideal instance needs a ring before it");
            if (inst.ideal) throw SemanticError("only one ideal instance is allowed");
            inst.ideal = elaborate_ideal(*ideal_expr, rings.front());
        } else {
            const auto& mod_expr = std::get<ModuleExpr>(parsed);
            if (rings.empty())
                throw SemanticError("a module instance needs a ring before it");
            if (inst.module) throw SemanticError("only one module instance is allowed");
            inst.module = elaborate_module(mod_expr, rings.front());
        }
    }
    if (rings.empty()) throw SemanticError("theorem instances need a ring expression");
    inst.ring = rings.front();
    if (rings.size() > 1) inst.factors = rings;
    return inst;
}

struct Job {
    std::string id;
    std::string instance;
    TheoremInstance inst;
};

std::vector<Job> synthesize_jobs(const GlobalOpts& g, const std::vector<std::string>& lines,
                                 const std::string& only_id) {
    std::vector<Job> jobs;
    for (const auto& line : lines) {
        const auto ast = parse_ring_expr(line);
        const auto el = elaborate(*ast, {g.max_size});
        if (el.integers)
            throw SemanticError("theorem corpus entries must be finite rings, not Zint");
        for (auto& [id, inst] : corpus_instances(el.ring)) {
            if (!only_id.empty() && only_id != id) continue;
            jobs.push_back({id, el.ring->provenance(), std::move(inst)});
        }
    }
    return jobs;
}

int cmd_check(const GlobalOpts& g, const std::string& id,
              const std::vector<std::string>& args, const std::string& corpus,
              std::ostream& out) {
    const ReportOptions ropts{g.json};
    if (!corpus.empty()) {
        if (!id.empty() && id != "all") {
            const auto& ids = theorem_ids();
            if (std::find(ids.begin(), ids.end(), id) == ids.end())
                throw SemanticError("unknown theorem id: " + id);
        }
        const auto jobs =
            synthesize_jobs(g, read_corpus(corpus), id == "all" ? std::string{} : id);
        std::vector<TheoremResult> results(jobs.size());
        std::vector<std::exception_ptr> errors(jobs.size());
        parallel_for(jobs.size(), g.threads, [&](std::size_t i) {
            try {
                results[i] = check_theorem(jobs[i].id, jobs[i].inst);
                results[i].transcript.insert(results[i].transcript.begin(),
                                             {"instance", jobs[i].instance});
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
        out << render_theorem_batch(results, ropts);
        for (const auto& r : results)
            if (r.outcome == TheoremOutcome::Fail) return 1;
        return 0;
    }
    if (id.empty()) throw SemanticError("check needs a theorem id");
    const auto& ids = theorem_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw SemanticError("unknown theorem id: " + id);
    const TheoremInstance inst = build_instance(g, args);
    const TheoremResult result = check_theorem(id, inst);
    out << render_theorem(result, ropts);
    return result.outcome == TheoremOutcome::Fail ? 1 : 0;
}

int cmd_ideals(const GlobalOpts& g, const std::string& expr_text, std::ostream& out) {
    const auto ast = parse_ring_expr(expr_text);
    const auto el = elaborate(*ast, {g.max_size});
    if (el.integers)
        throw SemanticError("Zint has infinitely many ideals; nothing to enumerate");
    out << render_ideals(el.ring, {g.json});
    return 0;
}

int cmd_spec(const GlobalOpts& g, const std::string& expr_text, std::ostream& out) {
    const auto ast = parse_ring_expr(expr_text);
    const auto el = elaborate(*ast, {g.max_size});
    if (el.integers)
        throw SemanticError("Zint has an infinite spectrum; nothing to enumerate");
    out << render_spectrum(el.ring, {g.json});
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    GlobalOpts g;
    std::string expr_text, ideal_text, corpus, mode = "strong", theorem_id;
    std::vector<std::string> check_args;

    CLI::App app{"ringlab: a workbench for finite commutative rings"};
    app.require_subcommand(1);
    app.add_flag("--json", g.json, "emit machine-readable reports");
    app.add_option("--max-size", g.max_size, "refuse rings with more elements than this")
        ->capture_default_str();
    app.add_option("--threads", g.threads, "parallelism for classification sweeps")
        ->capture_default_str();

    auto* classify_cmd = app.add_subcommand("classify", "classify a ring");
    classify_cmd->fallthrough();
    classify_cmd->add_option("expr", expr_text, "ring expression");
    classify_cmd->add_option("--corpus", corpus, "batch file of ring expressions");

    auto* ideals_cmd = app.add_subcommand("ideals", "list every ideal");
    ideals_cmd->fallthrough();
    ideals_cmd->add_option("expr", expr_text, "ring expression")->required();

    auto* factor_cmd = app.add_subcommand("factor", "factor one ideal");
    factor_cmd->fallthrough();
    factor_cmd->add_option("expr", expr_text, "ring expression")->required();
    factor_cmd->add_option("ideal", ideal_text, "ideal literal")->required();
    factor_cmd->add_option("--mode", mode, "isp|strong|sp|ssp|zpi|zpui")
        ->check(CLI::IsMember({"isp", "strong", "sp", "ssp", "zpi", "zpui"}))
        ->capture_default_str();

    auto* check_cmd = app.add_subcommand("check", "run a transfer-theorem check");
    check_cmd->fallthrough();
    check_cmd->add_option("id", theorem_id, "theorem id, or 'all' with --corpus");
    check_cmd->add_option("instance", check_args, "instance expressions");
    check_cmd->add_option("--corpus", corpus, "batch file of ring expressions");

    auto* spec_cmd = app.add_subcommand("spec", "list the prime spectrum");
    spec_cmd->fallthrough();
    spec_cmd->add_option("expr", expr_text, "ring expression")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify_cmd->parsed()) {
            if (expr_text.empty() && corpus.empty())
                throw SemanticError("classify needs a ring expression or --corpus");
            return cmd_classify(g, expr_text, corpus, out);
        }
        if (ideals_cmd->parsed()) return cmd_ideals(g, expr_text, out);
        if (factor_cmd->parsed()) return cmd_factor(g, expr_text, ideal_text, mode, out);
        if (check_cmd->parsed()) return cmd_check(g, theorem_id, check_args, corpus, out);
        if (spec_cmd->parsed()) return cmd_spec(g, expr_text, out);
        err << "no command given\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const SemanticError& e) {
        err << "semantic error: " << e.what() << "\n";
        return 3;
    } catch (const std::logic_error& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace ringlab::cli
