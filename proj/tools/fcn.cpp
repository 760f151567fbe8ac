#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fcn/generate.hpp"
#include "fcn/laws.hpp"
#include "fcn/rewrite.hpp"
#include "fcn/syntax.hpp"
#include "fcn/trace.hpp"

using namespace fcn;

namespace {

int cmd_check(const std::string& file) {
    Program prog = load_program(file);
    for (const auto& [name, c] : prog.cells) {
        Boundary b = infer_boundary(c, prog.val.sig);
        std::cout << "OK " << name << " : " << print_boundary(b) << "\n";
    }
    return 0;
}

Cell need_cell(const Program& prog, const std::string& name) {
    auto c = prog.find_cell(name);
    if (!c) throw Error(ErrorKind::UnknownCell, name);
    return *c;
}

int cmd_normalize(const std::string& file, const std::string& name, std::size_t budget, bool trace) {
    Program prog = load_program(file);
    Cell c = need_cell(prog, name);
    auto rep = normalize_cell(c, budget, prog.val.sig);
    if (trace) {
        for (const auto& [rule, pos] : rep.steps) std::cout << "step " << rule_name(rule) << " at " << print_position(pos) << "\n";
    }
    std::cout << print_cell(rep.result) << "\n";
    std::cout << "boundary " << print_boundary(infer_boundary(rep.result, prog.val.sig)) << "\n";
    std::cout << rep.steps.size() << " step(s)";
    if (rep.budget_exhausted) std::cout << ", budget exhausted";
    std::cout << "\n";
    return 0;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_eval(const std::string& file, const std::string& name, const std::string& input, const std::string& script,
             std::size_t depth) {
    Program prog = load_program(file);
    Cell c = need_cell(prog, name);
    std::vector<ScriptMove> moves;
    if (!script.empty()) moves = parse_script(slurp(script));
    for (const auto& e : run_trace(c, parse_value(input), moves, prog.val, depth)) std::cout << print_event(e) << "\n";
    return 0;
}

int cmd_laws(const std::string& file, const Config& cfg) {
    Valuation val = file.empty() ? default_valuation() : load_program(file).val;
    LawOptions opts;
    opts.cfg = cfg;
    if (!file.empty()) {
        Program prog = load_program(file);
        for (const auto& [name, c] : prog.cells) opts.golden.push_back(c);
    }
    bool ok = true;
    for (const auto& r : run_all_laws(val, opts)) {
        std::cout << print_law_line(r) << "\n";
        ok = ok && r.status() != LawResult::Status::Fail;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fcn: typecheck, normalize, run and law-check cells"};
    app.require_subcommand(1);

    std::string file, cell_name, input, script;
    std::size_t budget = Config{}.budget;
    bool trace_rules = false;
    Config cfg;

    auto* check = app.add_subcommand("check", "typecheck every cell in a file");
    check->add_option("file", file, "program file")->required();

    auto* norm = app.add_subcommand("normalize", "rewrite a cell to normal form");
    norm->add_option("file", file, "program file")->required();
    norm->add_option("--cell", cell_name, "cell name")->required();
    norm->add_option("--budget", budget, "maximum rewrite steps");
    norm->add_flag("--trace-rules", trace_rules, "print each fired rule and its position");

    auto* eval = app.add_subcommand("eval", "run a left-closed cell against a script");
    eval->add_option("file", file, "program file")->required();
    eval->add_option("--cell", cell_name, "cell name")->required();
    eval->add_option("--input", input, "top boundary value")->required();
    eval->add_option("--script", script, "move script file");
    eval->add_option("--depth", cfg.depth, "maximum ^x unfoldings");

    auto* laws = app.add_subcommand("laws", "check the law suites over a signature");
    laws->add_option("file", file, "program file (default signature when omitted)");
    laws->add_option("--depth", cfg.depth, "observation depth");
    laws->add_option("--samples", cfg.samples, "samples per non-enumerable comparison");
    laws->add_option("--seed", cfg.seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("FCN_SEED")) {
        try {
            cfg.seed = std::stoull(env, nullptr, 0);
        } catch (const std::exception&) {
            std::cerr << "error: FCN_SEED is not a number: " << env << "\n";
            return 2;
        }
    }

    try {
        if (*check) return cmd_check(file);
        if (*norm) return cmd_normalize(file, cell_name, budget, trace_rules);
        if (*eval) return cmd_eval(file, cell_name, input, script, cfg.depth);
        if (*laws) return cmd_laws(file, cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
