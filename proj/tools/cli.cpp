#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "app.hpp"
#include "hopfcoh/exact_sequence.hpp"
#include "hopfcoh/torsor.hpp"

namespace hopfcoh::app {

namespace {

struct Options {
    std::uint64_t budget = defaultBudget();
    std::string format = "text";
    std::string out;
    unsigned threads = 1;
    bool timing = false;
    bool witnesses = false;
    std::string incl;
    std::vector<std::string> files;
    std::string builtinName;

    SearchConfig cfg() const { return SearchConfig{budget, threads}; }
};

struct Loaded {
    std::string path;
    std::string text;
    SpecFile spec;
};

std::string readAll(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, 0, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Loaded load(const std::string& path, bool validate = true) {
    Loaded l{path, readAll(path), {}};
    l.spec = parseSpec(l.text, std::filesystem::path(path).parent_path(), validate);
    return l;
}

ComodulePtr requireComodule(const Loaded& l) {
    if (!l.spec.comodule) throw ParseError(0, 0, l.path + " has no comodule block");
    return l.spec.comodule;
}

HopfModule moduleOrRegular(const Loaded& l) {
    if (l.spec.module) return *l.spec.module;
    return regularHopfModule(requireComodule(l));
}

Json inputJson(const Loaded& l) {
    Json j;
    j["file"] = l.path;
    j["hash"] = hashTag(l.text);
    j["kind"] = l.spec.kind();
    j["field"] = l.spec.field.name();
    if (!l.spec.name.empty()) j["name"] = l.spec.name;
    return j;
}

Json vecs(const std::vector<Vec>& vs) {
    Json j = Json::array();
    for (const auto& v : vs) j.push_back(toJson(v));
    return j;
}

Json indices(const std::vector<std::size_t>& xs) {
    Json j = Json::array();
    for (auto x : xs) j.push_back(x);
    return j;
}

/// The result of one command: a JSON body plus the checks behind its verdict.
struct Outcome {
    Json result = Json::object();
    AxiomReport checks;
};

Outcome cmdCheck(const Loaded& l) {
    Outcome o;
    const SpecFile& s = l.spec;
    o.checks.merge("algebra: ", checkAlgebraAxioms(*s.algebra));
    if (s.hopf) o.checks.merge("hopf: ", checkHopfAxioms(*s.hopf));
    if (s.comodule) {
        o.checks.merge("hopf: ", checkHopfAxioms(*s.comodule->hopf));
        o.checks.merge("comodule: ", checkComoduleAlgebra(*s.comodule));
        if (checkComoduleAlgebra(*s.comodule).passed()) o.checks.merge("diagram: ", checkDiagram(buildDiagram(*s.comodule)));
    }
    if (s.module) o.checks.merge("module: ", checkHopfModule(*s.module));
    o.result["suites"] = o.checks.checks.size();
    return o;
}

Outcome cmdH0(const Loaded& l, const SearchConfig& cfg) {
    const ComodulePtr e = requireComodule(l);
    const ElementGroup g = h0(*e, cfg);
    Outcome o;
    o.result["basis"] = e->algebra().labels();
    o.result["order"] = g.size();
    o.result["elements"] = vecs(g.elements);
    return o;
}

Outcome cmdZ1(const Loaded& l, const SearchConfig& cfg) {
    const ComodulePtr e = requireComodule(l);
    const AlgebraDiagram d = buildDiagram(*e);
    const std::vector<Vec> z = diagramZ1(d, cfg);
    Outcome o;
    o.result["basis"] = d.level1->labels();
    o.result["count"] = z.size();
    o.result["cocycles"] = vecs(z);
    return o;
}

Outcome cmdH1(const Loaded& l, const SearchConfig& cfg, bool witnesses) {
    const ComodulePtr e = requireComodule(l);
    const AlgebraDiagram d = buildDiagram(*e);
    const CohomologyResult r = diagramCohomology(d, cfg);
    Outcome o;
    o.result["basis"] = d.level1->labels();
    o.result["h0_order"] = r.h0.size();
    o.result["z1_count"] = r.z1.size();
    o.result["classes"] = r.h1.size();
    Json classes = Json::array();
    for (const auto& orbit : r.h1) {
        Json c;
        c["representative"] = toJson(orbit.representative);
        c["formatted"] = d.level1->format(orbit.representative);
        c["size"] = orbit.members.size();
        if (witnesses) {
            c["members"] = vecs(orbit.members);
            c["witnesses"] = vecs(orbit.witnesses);
        }
        classes.push_back(std::move(c));
    }
    o.result["h1"] = std::move(classes);
    return o;
}

Outcome cmdTorsors(const Loaded& l, const SearchConfig& cfg) {
    Outcome o;
    if (l.spec.module) {
        const RestrictedComplex c(*l.spec.module);
        const RestrictedTorsorReport r = corollary39Check(c, cfg);
        o.result["classes"] = r.coactions.size();
        Json cs = Json::array();
        for (const auto& m : r.coactions) cs.push_back(toJson(m));
        o.result["coactions"] = std::move(cs);
        o.checks = r.checks;
        return o;
    }
    const TorsorClassification t = classifyTorsors(requireComodule(l), cfg);
    o.result["classes"] = t.classes.size();
    Json cs = Json::array();
    for (const auto& c : t.classes) {
        Json j;
        j["cocycle"] = toJson(c.cocycle);
        j["coaction"] = toJson(c.coaction);
        cs.push_back(std::move(j));
    }
    o.result["torsors"] = std::move(cs);
    o.checks = t.checks;
    return o;
}

Json comparisonJson(const ComparisonReport& r) {
    Json j;
    j["left_h0"] = r.leftH0;
    j["right_h0"] = r.rightH0;
    j["left_h1"] = r.leftH1;
    j["right_h1"] = r.rightH1;
    j["pairing"] = indices(r.pairing);
    return j;
}

Outcome cmdCompareGroup(const Loaded& l, const SearchConfig& cfg) {
    const ComparisonReport r = compareTheorem15(*requireComodule(l), cfg);
    return {comparisonJson(r), r.checks};
}

Outcome cmdCompareRestricted(const Loaded& l, const SearchConfig& cfg) {
    const RestrictedComplex c(moduleOrRegular(l));
    const ComparisonReport r = compareTheorem26(c, cfg);
    return {comparisonJson(r), r.checks};
}

Outcome cmdExactSeq(const Loaded& d, const Loaded& e, const std::string& inclPath, const SearchConfig& cfg) {
    const ComodulePtr sub = requireComodule(d), ambient = requireComodule(e);
    const Matrix incl = parseMatrixText(readAll(inclPath), ambient->field(), ambient->dim(), sub->dim());
    const ExactSequenceReport rep = verifyExactSequence(makeInclusion(sub, ambient, incl), cfg);
    Outcome o;
    Json terms = Json::array();
    for (const auto& [name, size] : rep.termSizes) {
        Json t;
        t["term"] = name;
        t["size"] = size;
        terms.push_back(std::move(t));
    }
    o.result["terms"] = std::move(terms);
    o.result["normality"] = toJson(rep.normality);
    o.result["extended"] = rep.extended;
    o.checks = rep.exactness;
    return o;
}

Outcome cmdBridge(const Loaded& l, const SearchConfig& cfg) {
    const GroupTorsorReport r = groupTorsorBridge(requireComodule(l), cfg);
    Outcome o;
    o.result["hopf_classes"] = r.hopfClasses;
    o.result["group_classes"] = r.groupClasses;
    o.result["pairing"] = indices(r.pairing);
    o.checks = r.checks;
    return o;
}

void emit(const Json& report, const Options& opt, std::ostream& out) {
    const std::string text = opt.format == "json" ? renderJson(report) : renderText(report);
    if (opt.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw ParseError(0, 0, "cannot write " + opt.out);
    f << text;
}

int runCommand(const std::string& name, const Options& opt, std::ostream& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const SearchConfig cfg = opt.cfg();

    if (name == "paper-examples") {
        const auto rows = runPaperExamples(cfg);
        emit(paperExamplesReport(rows, opt.timing), opt, out);
        for (const auto& r : rows)
            if (!r.correct) return kMismatch;
        return kOk;
    }
    if (name == "builtin") {
        const auto& table = builtins();
        auto it = table.find(opt.builtinName);
        if (it == table.end()) {
            std::string names;
            for (const auto& [k, v] : table) names += " " + k;
            throw ParseError(0, 0, "unknown builtin \"" + opt.builtinName + "\"; available:" + names);
        }
        const std::string text = serializeSpec(it->second);
        if (opt.out.empty()) {
            out << text;
        } else {
            std::ofstream(opt.out, std::ios::binary) << text;
        }
        return kOk;
    }

    std::vector<Loaded> inputs;
    for (const auto& f : opt.files) inputs.push_back(load(f, name != "check"));
    Outcome o;
    if (name == "check") o = cmdCheck(inputs[0]);
    else if (name == "h0") o = cmdH0(inputs[0], cfg);
    else if (name == "z1") o = cmdZ1(inputs[0], cfg);
    else if (name == "h1") o = cmdH1(inputs[0], cfg, opt.witnesses);
    else if (name == "torsors") o = cmdTorsors(inputs[0], cfg);
    else if (name == "compare-group") o = cmdCompareGroup(inputs[0], cfg);
    else if (name == "compare-restricted") o = cmdCompareRestricted(inputs[0], cfg);
    else if (name == "exact-seq") o = cmdExactSeq(inputs[0], inputs[1], opt.incl, cfg);
    else if (name == "bridge-torsors") o = cmdBridge(inputs[0], cfg);

    Json report;
    std::string echo = name;
    for (const auto& f : opt.files) echo += " " + f;
    if (!opt.incl.empty()) echo += " --incl " + opt.incl;
    report["command"] = echo;
    Json ins = Json::array();
    for (const auto& l : inputs) ins.push_back(inputJson(l));
    report["inputs"] = std::move(ins);
    report["result"] = std::move(o.result);
    report["checks"] = toJson(o.checks);
    report["verdict"] = o.checks.passed() ? "PASS" : "FAIL";
    if (opt.timing)
        report["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    emit(report, opt, out);
    return o.checks.passed() ? kOk : kMismatch;
}

} // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact non-abelian Hopf cohomology over finite fields", "hopfcoh"};
    app.require_subcommand(1);
    // Subcommands inherit this, so global flags may follow the subcommand.
    app.fallthrough();
    Options opt;
    app.add_option("--budget", opt.budget, "Cap on candidates per enumeration (default 10^7, or HOPFCOH_BUDGET)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", opt.out, "Write the report to this file");
    app.add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_flag("--timing", opt.timing, "Include timings (reports are then not reproducible)");

    struct Sub {
        const char* name;
        const char* help;
        int files;
    };
    const std::vector<Sub> subs{
        {"check", "Run every axiom suite on a spec", 1},
        {"h0", "H^0 of a comodule algebra", 1},
        {"z1", "Hopf 1-cocycles of a comodule algebra", 1},
        {"h1", "H^1 of a comodule algebra", 1},
        {"torsors", "Torsor classes of a comodule algebra, or of a Hopf module through End_S", 1},
        {"compare-group", "Hopf cohomology over k^G against group cohomology", 1},
        {"compare-restricted", "Restricted cohomology of a Hopf module against End_S(M)", 1},
        {"exact-seq", "Exact sequence of an inclusion D -> E", 2},
        {"bridge-torsors", "Hopf torsors over k^G against group torsors", 1},
        {"paper-examples", "Run every worked example and print expected against computed", 0},
        {"builtin", "Print the spec of a built-in structure", 0},
    };
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        if (s.files == 1) sub->add_option("spec", opt.files, "Spec file")->required()->expected(1);
        if (s.files == 2) sub->add_option("specs", opt.files, "Spec files D and E")->required()->expected(2);
        if (std::string(s.name) == "h1") sub->add_flag("--witnesses", opt.witnesses, "List members and witnesses");
        if (std::string(s.name) == "exact-seq")
            sub->add_option("--incl", opt.incl, "JSON matrix of the inclusion")->required();
        if (std::string(s.name) == "builtin") sub->add_option("name", opt.builtinName, "Structure name")->required();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    const std::string name = app.get_subcommands().front()->get_name();
    try {
        return runCommand(name, opt, out);
    } catch (const EnumerationOverBudget& e) {
        err << "hopfcoh: " << e.what() << "\n";
        return kBudget;
    } catch (const AxiomError& e) {
        err << "hopfcoh: " << e.what() << "\n";
        return kMismatch;
    } catch (const Error& e) {
        err << "hopfcoh: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace hopfcoh::app
