#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "aztec/engine.hpp"
#include "aztec/factor.hpp"
#include "aztec/render.hpp"
#include "aztec/serialize.hpp"
#include "aztec/verify.hpp"

namespace {

using namespace aztec;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << content;
}

Json read_spec_json(const std::string& path) {
    if (path == "-") {
        std::string all((std::istreambuf_iterator<char>(std::cin)),
                        std::istreambuf_iterator<char>());
        try {
            return Json::parse(all);
        } catch (const Json::exception& e) {
            throw SpecError(std::string("invalid JSON on stdin: ") + e.what());
        }
    }
    return load_json(path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int parse_int_str(const std::string& s, const std::string& what) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw SpecError("cannot parse " + what + ": " + s);
    }
    if (used != s.size()) throw SpecError("cannot parse " + what + ": " + s);
    return v;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<int> out;
    if (s.empty()) return out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        out.push_back(parse_int_str(tok, what));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// "a@c2" for window holes.
WindowSpec parse_window_hole(const std::string& s) {
    size_t at = s.find('@');
    if (at == std::string::npos) throw SpecError("window hole must look like a@c2: " + s);
    return WindowSpec{parse_int_str(s.substr(0, at), "hole size"),
                      parse_int_str(s.substr(at + 1), "hole center")};
}

// "k,l@cx,cy" for torus holes; the placement is the forced majority color.
TorusHole parse_torus_hole(const std::string& s) {
    size_t at = s.find('@');
    if (at == std::string::npos) throw SpecError("torus hole must look like k,l@cx,cy: " + s);
    auto shape = parse_int_list(s.substr(0, at), "hole shape");
    auto center = parse_int_list(s.substr(at + 1), "hole center");
    if (shape.size() != 2 || center.size() != 2)
        throw SpecError("torus hole must look like k,l@cx,cy: " + s);
    TorusHole h{shape[0], shape[1], center[0], center[1], 0};
    h.placement = torus_hole_majority(h.k, h.cy);
    return h;
}

// "v@x,y" or "h@x,y" for separations.
TorusSep parse_sep(const std::string& s) {
    size_t at = s.find('@');
    if (at == std::string::npos || at != 1 || (s[0] != 'v' && s[0] != 'h'))
        throw SpecError("separation must look like v@x,y or h@x,y: " + s);
    auto xy = parse_int_list(s.substr(2), "separation anchor");
    if (xy.size() != 2) throw SpecError("separation must look like v@x,y or h@x,y: " + s);
    return TorusSep{s[0] == 'v' ? 0 : 1, xy[0], xy[1]};
}

// "AD:n@dx,dy" or "O:k,l@c2x,c2y" for windows cut out of a diamond frame.
DiamondWindow parse_diamond_window(const std::string& s) {
    size_t colon = s.find(':');
    size_t at = s.find('@');
    if (colon == std::string::npos || at == std::string::npos || at < colon)
        throw SpecError("window must look like AD:n@dx,dy or O:k,l@c2x,c2y: " + s);
    std::string shape = s.substr(0, colon);
    auto params = parse_int_list(s.substr(colon + 1, at - colon - 1), "window shape");
    auto place = parse_int_list(s.substr(at + 1), "window position");
    DiamondWindow w;
    if (shape == "AD") {
        if (params.size() != 1 || place.size() != 2)
            throw SpecError("window must look like AD:n@dx,dy: " + s);
        w.is_ad = true;
        w.n = params[0];
        w.dx = place[0];
        w.dy = place[1];
        return w;
    }
    if (shape == "O") {
        if (params.size() != 2 || place.size() != 2)
            throw SpecError("window must look like O:k,l@c2x,c2y: " + s);
        w.is_ad = false;
        w.k = params[0];
        w.l = params[1];
        w.c2x = place[0];
        w.c2y = place[1];
        w.majority = odd_window_majority(w.k, w.l, w.c2x, w.c2y);
        return w;
    }
    throw SpecError("unknown window shape: " + shape);
}

std::string resolve_path(const std::string& out, const std::string& fallback) {
    return out.empty() ? fallback : out;
}

struct BuildFlags {
    std::string family = "AD";
    bool torus = false;
    int m = 0, n = 0, k = 0, l = 0;
    std::string variant;
    std::string kept;
    std::vector<std::string> holes;
    std::vector<std::string> windows;
    std::vector<std::string> seps;
    std::string c2;
    std::string format = "spec";
    std::string out;
};

int run_build(const BuildFlags& fl) {
    Json spec;
    if (fl.torus) {
        std::vector<TorusHole> holes;
        for (const auto& s : fl.holes) holes.push_back(parse_torus_hole(s));
        std::vector<TorusSep> seps;
        for (const auto& s : fl.seps) seps.push_back(parse_sep(s));
        spec = emit_torus_spec(build_torus(fl.m, fl.n, holes, seps));
    } else if (!fl.variant.empty()) {
        RVariant v = rvariant_from_name(fl.variant);
        std::vector<int> kept = parse_int_list(fl.kept, "kept labels");
        validate_r_params(v, fl.m, fl.n, kept);
        spec = emit_rgraph_spec(v, fl.m, fl.n, kept);
    } else if (fl.family == "empty") {
        spec = emit_empty_spec();
    } else if (fl.family == "AD") {
        std::vector<DiamondWindow> windows;
        for (const auto& s : fl.windows) windows.push_back(parse_diamond_window(s));
        spec = emit_diamond_spec(fl.m, fl.n, windows);
    } else if (fl.family == "O") {
        auto c2 = parse_int_list(fl.c2, "center");
        if (c2.size() != 2) throw SpecError("the O family needs --c2 X,Y");
        spec = emit_odd_spec(fl.k, fl.l, c2[0], c2[1],
                             odd_window_majority(fl.k, fl.l, c2[0], c2[1]));
    } else {
        Family f = family_from_name(fl.family);
        std::vector<WindowSpec> holes;
        for (const auto& s : fl.holes) holes.push_back(parse_window_hole(s));
        spec = emit_windowed_spec(f, fl.m, fl.k, holes);
    }
    SpecDoc doc = parse_spec(spec);
    if (fl.format == "spec") {
        write_output(fl.out, dump(spec));
    } else if (fl.format == "graph") {
        write_output(fl.out, dump(doc.is_torus ? emit_torus_graph(doc.torus)
                                               : emit_graph(dual_graph(doc.region))));
    } else if (fl.format == "svg") {
        write_output(fl.out, doc.is_torus ? render_torus(doc.torus) : render_region(doc.region));
    } else {
        throw SpecError("unknown format: " + fl.format);
    }
    return 0;
}

struct CountFlags {
    std::string spec = "-";
    std::string engine = "auto";
    bool factor = false;
    bool json = false;
    std::string out;
};

int run_count(const CountFlags& fl) {
    SpecDoc doc = parse_spec(read_spec_json(fl.spec));
    Engine e = engine_from_name(fl.engine);
    Int value = doc.is_torus ? count_torus(doc.torus, e) : count_region(doc.region, e);
    std::string factored;
    if (fl.factor) factored = value == 0 ? "0" : format_factorization(factorize(value));
    if (fl.json) {
        Json j = emit_count(value, engine_name(e));
        if (fl.factor && value != 0) j["factorization"] = emit_factorization(factorize(value));
        write_output(fl.out, dump(j));
    } else {
        std::string line = to_decimal(value);
        if (fl.factor) line += " = " + factored;
        write_output(fl.out, line + "\n");
    }
    return 0;
}

struct FormulaFlags {
    int diamond = -1;
    std::string variant;
    std::string family;
    int m = 0, n = 0, k = 0;
    std::string kept;
    std::vector<std::string> holes;
    bool factor = false;
    bool json = false;
    std::string out;
};

int run_formula(const FormulaFlags& fl) {
    Int value;
    if (fl.diamond >= 0) {
        value = aztec_diamond_count(fl.diamond);
    } else if (!fl.variant.empty()) {
        value = count_r_formula(rvariant_from_name(fl.variant), fl.m, fl.n,
                                parse_int_list(fl.kept, "kept labels"));
    } else if (!fl.family.empty()) {
        std::vector<WindowSpec> holes;
        for (const auto& s : fl.holes) holes.push_back(parse_window_hole(s));
        value = predicted_windowed_count(family_from_name(fl.family), fl.m, fl.k, holes);
    } else {
        throw SpecError("formula needs one of --diamond, --variant, --family");
    }
    if (fl.json) {
        Json j = emit_count(value, "formula");
        if (fl.factor && value != 0) j["factorization"] = emit_factorization(factorize(value));
        write_output(fl.out, dump(j));
    } else {
        std::string line = to_decimal(value);
        if (fl.factor) line += " = " + (value == 0 ? "0" : format_factorization(factorize(value)));
        write_output(fl.out, line + "\n");
    }
    return 0;
}

struct VerifyFlags {
    std::string suite = "smoke";
    std::vector<std::string> checks;
    uint64_t seed = 20260816;
    int threads = 0;
    bool list = false;
    std::string out;
};

int run_verify(const VerifyFlags& fl) {
    if (fl.list) {
        std::string text;
        for (const Check& c : check_registry()) {
            text += c.id + "  " + c.description + "  [";
            for (size_t i = 0; i < c.suites.size(); ++i) text += (i ? " " : "") + c.suites[i];
            text += "]\n";
        }
        write_output(fl.out, text);
        return 0;
    }
    VerifyOptions opt;
    opt.suite = fl.suite;
    opt.seed = fl.seed;
    opt.threads = fl.threads;
    std::vector<CheckResult> results;
    if (!fl.checks.empty()) {
        for (const std::string& id : fl.checks) {
            auto rs = run_check(id, opt);
            results.insert(results.end(), rs.begin(), rs.end());
        }
    } else {
        results = run_suite(opt);
    }
    std::string text;
    bool any_fail = false;
    for (const CheckResult& r : results) {
        text += result_json(r).dump() + "\n";
        if (!r.pass) any_fail = true;
    }
    text += summary_json(opt, results).dump() + "\n";
    write_output(fl.out, text);
    return any_fail ? 1 : 0;
}

struct ComplementFlags {
    std::string spec = "-";
    int sigma = 0;
    std::string out;
};

int run_complement(const ComplementFlags& fl) {
    SpecDoc doc = parse_spec(read_spec_json(fl.spec));
    BoardGraph board =
        doc.is_torus ? board_from_torus(doc.torus) : board_from_match(dual_graph(doc.region));
    Completion c = cellular_complement(board, fl.sigma);
    if (!c.ok) throw SpecError("completion step does not apply: " + c.error);
    Json j = emit_completion(c);
    j["result"] = doc.is_torus ? emit_torus_graph(torus_from_board(c.result))
                               : emit_graph(match_from_board(c.result));
    write_output(fl.out, dump(j));
    return 0;
}

struct CorrelateFlags {
    int m = 0, n = 0;
    std::vector<std::string> holes;
    bool json = false;
    std::string out;
};

int run_correlate(const CorrelateFlags& fl) {
    std::vector<TorusHole> holes;
    for (const auto& s : fl.holes) holes.push_back(parse_torus_hole(s));
    mpq_class q = finite_size_correlation(fl.m, fl.n, holes);
    if (fl.json) {
        Json j;
        j["schema_version"] = 1;
        j["type"] = "correlation";
        j["num"] = q.get_num().get_str();
        j["den"] = q.get_den().get_str();
        write_output(fl.out, dump(j));
    } else {
        write_output(fl.out, q.get_str() + "\n");
    }
    return 0;
}

struct RenderFlags {
    std::string spec = "-";
    std::string out;
};

int run_render(const RenderFlags& fl) {
    SpecDoc doc = parse_spec(read_spec_json(fl.spec));
    write_output(fl.out, doc.is_torus ? render_torus(doc.torus) : render_region(doc.region));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact matching counts for diamond lattice regions and tori"};
    app.require_subcommand(1);

    BuildFlags bf;
    CLI::App* build = app.add_subcommand("build", "construct a region or torus");
    build->add_option("--family", bf.family, "empty, AD, O, AR, AR', AR'', AR'''");
    build->add_flag("--torus", bf.torus, "build a torus instead of a region");
    build->add_option("--m", bf.m, "frame order");
    build->add_option("--n", bf.n, "second frame order");
    build->add_option("--k", bf.k, "window order");
    build->add_option("--l", bf.l, "second window order for the O family");
    build->add_option("--variant", bf.variant, "deleted-row form: R, R', R'', R'''");
    build->add_option("--kept", bf.kept, "kept labels for a deleted-row form, e.g. 1,4,5");
    build->add_option("--hole", bf.holes, "window hole a@c2, or torus hole k,l@cx,cy");
    build->add_option("--window", bf.windows, "diamond window AD:n@dx,dy or O:k,l@c2x,c2y");
    build->add_option("--sep", bf.seps, "torus separation v@x,y or h@x,y");
    build->add_option("--c2", bf.c2, "doubled center X,Y for the O family");
    build->add_option("--format", bf.format, "spec, graph, or svg")->capture_default_str();
    build->add_option("--out", bf.out, "output path, - for stdout");

    CountFlags cf;
    CLI::App* count = app.add_subcommand("count", "count perfect matchings of a spec");
    count->add_option("--spec", cf.spec, "spec path, - for stdin")->capture_default_str();
    count->add_option("--engine", cf.engine, "auto, brute, kasteleyn, torus")
        ->capture_default_str();
    count->add_flag("--factor", cf.factor, "factor the count");
    count->add_flag("--json", cf.json, "emit JSON instead of text");
    count->add_option("--out", cf.out, "output path, - for stdout");

    FormulaFlags ff;
    CLI::App* formula = app.add_subcommand("formula", "evaluate a closed-form count");
    formula->add_option("--diamond", ff.diamond, "diamond order n");
    formula->add_option("--variant", ff.variant, "deleted-row form: R, R', R'', R'''");
    formula->add_option("--family", ff.family, "window family: AR, AR', AR'', AR'''");
    formula->add_option("--m", ff.m, "frame order");
    formula->add_option("--n", ff.n, "second frame order");
    formula->add_option("--k", ff.k, "window order");
    formula->add_option("--kept", ff.kept, "kept labels, e.g. 1,4,5");
    formula->add_option("--hole", ff.holes, "window hole a@c2");
    formula->add_flag("--factor", ff.factor, "factor the count");
    formula->add_flag("--json", ff.json, "emit JSON instead of text");
    formula->add_option("--out", ff.out, "output path, - for stdout");

    VerifyFlags vf;
    CLI::App* verify = app.add_subcommand("verify", "run identity check suites");
    verify->add_option("--suite", vf.suite, "smoke, exhaustive-small, figures, torus, full")
        ->capture_default_str();
    verify->add_option("--check", vf.checks, "run one check by id (repeatable)");
    verify->add_option("--seed", vf.seed, "random seed")->capture_default_str();
    verify->add_option("--threads", vf.threads, "worker threads, 0 = automatic");
    verify->add_flag("--list", vf.list, "list known checks");
    verify->add_option("--out", vf.out, "output path, - for stdout");

    ComplementFlags xf;
    CLI::App* complement = app.add_subcommand("complement", "apply one completion step");
    complement->add_option("--spec", xf.spec, "spec path, - for stdin")->capture_default_str();
    complement->add_option("--sigma", xf.sigma, "face class, 0 or 1")->capture_default_str();
    complement->add_option("--out", xf.out, "output path, - for stdout");

    CorrelateFlags rf;
    CLI::App* correlate = app.add_subcommand("correlate", "finite size hole correlation");
    correlate->add_option("--m", rf.m, "torus order m")->required();
    correlate->add_option("--n", rf.n, "torus order n")->required();
    correlate->add_option("--hole", rf.holes, "torus hole k,l@cx,cy (repeatable)");
    correlate->add_flag("--json", rf.json, "emit JSON instead of text");
    correlate->add_option("--out", rf.out, "output path, - for stdout");

    RenderFlags gf;
    CLI::App* render = app.add_subcommand("render", "draw a spec as SVG");
    render->add_option("--spec", gf.spec, "spec path, - for stdin")->capture_default_str();
    render->add_option("--out", gf.out, "output path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(build)) return run_build(bf);
        if (app.got_subcommand(count)) return run_count(cf);
        if (app.got_subcommand(formula)) return run_formula(ff);
        if (app.got_subcommand(verify)) return run_verify(vf);
        if (app.got_subcommand(complement)) return run_complement(xf);
        if (app.got_subcommand(correlate)) return run_correlate(rf);
        if (app.got_subcommand(render)) return run_render(gf);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const EngineRefusal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
