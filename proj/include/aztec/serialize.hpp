#pragma once

#include <fstream>
#include <initializer_list>
#include <string>

#include "json.hpp"

#include "aztec/factor.hpp"
#include "aztec/complement.hpp"
#include "aztec/region.hpp"
#include "aztec/torus.hpp"
#include "aztec/windowed.hpp"

namespace aztec {

using Json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void check_fields(const Json& j, std::initializer_list<const char*> req,
                         std::initializer_list<const char*> opt = {}) {
    if (!j.is_object()) throw SpecError("spec node must be a JSON object");
    for (const char* k : req)
        if (!j.contains(k)) throw SpecError(std::string("spec missing field: ") + k);
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : req) known = known || item.key() == k;
        for (const char* k : opt) known = known || item.key() == k;
        if (!known) throw SpecError("spec has unknown field: " + item.key());
    }
}

inline int to_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw SpecError(std::string(what) + " must be an integer");
    long v = j.get<long>();
    if (v < -1000000000L || v > 1000000000L)
        throw SpecError(std::string(what) + " out of range");
    return static_cast<int>(v);
}

inline std::pair<int, int> to_pair(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw SpecError(std::string(what) + " must be a pair of integers");
    return {to_int(j[0], what), to_int(j[1], what)};
}

inline int to_color(const Json& j, const char* what) {
    if (!j.is_string()) throw SpecError(std::string(what) + " must be \"white\" or \"black\"");
    std::string s = j.get<std::string>();
    if (s == "white") return 1;
    if (s == "black") return 0;
    throw SpecError(std::string(what) + " must be \"white\" or \"black\"");
}

inline const char* color_name(int c) { return c == 1 ? "white" : "black"; }

}  // namespace detail

// A window cut out of a plain diamond: either a diamond-shaped hole given by
// its order and translation, or an odd-rectangle hole given by its doubled
// center.
struct DiamondWindow {
    bool is_ad = false;
    int n = 0, dx = 0, dy = 0;
    int k = 0, l = 0, c2x = 0, c2y = 0, majority = 1;
};

inline std::vector<Sq> diamond_window_squares(const DiamondWindow& w) {
    std::vector<Sq> out;
    if (w.is_ad) {
        for (Sq s : build_aztec_diamond(w.n).squares)
            out.push_back(Sq{s.x + w.dx, s.y + w.dy});
        return out;
    }
    if (odd_window_majority(w.k, w.l, w.c2x, w.c2y) != w.majority)
        throw SpecError("invalid-placement: window majority disagrees with center");
    return odd_window_squares(w.k, w.l, w.c2x, w.c2y);
}

// Parsed and built spec document.
struct SpecDoc {
    std::string type;    // "region", "rgraph", "torus"
    std::string family;  // region family, "" otherwise

    Region region;  // built region unless is_torus
    bool is_torus = false;
    TorusGraph torus;

    bool has_windowed = false;
    Family wfamily = Family::wide_even;
    int wm = 0, wk = 0;
    std::vector<WindowSpec> wholes;

    bool has_rgraph = false;
    RVariant rvariant = RVariant::wide_even;
    int rm = 0, rn = 0;
    std::vector<int> rkept;
};

inline Family family_from_name(const std::string& s) {
    for (Family f : {Family::wide_even, Family::wide_odd, Family::tall_odd, Family::tall_even})
        if (s == family_name(f)) return f;
    throw SpecError("unknown family: " + s);
}

inline RVariant rvariant_from_name(const std::string& s) {
    for (RVariant v :
         {RVariant::wide_even, RVariant::wide_odd, RVariant::tall_odd, RVariant::tall_even})
        if (s == rvariant_name(v)) return v;
    throw SpecError("unknown variant: " + s);
}

inline SpecDoc parse_spec(const Json& j) {
    if (!j.is_object()) throw SpecError("spec must be a JSON object");
    if (!j.contains("schema_version") || !j.at("schema_version").is_number_integer() ||
        j.at("schema_version").get<int>() != 1)
        throw SpecError("spec schema_version must be 1");
    if (!j.contains("type") || !j.at("type").is_string())
        throw SpecError("spec needs a type field");
    SpecDoc doc;
    doc.type = j.at("type").get<std::string>();

    if (doc.type == "region") {
        if (!j.contains("family") || !j.at("family").is_string())
            throw SpecError("region spec needs a family field");
        doc.family = j.at("family").get<std::string>();
        if (doc.family == "empty") {
            detail::check_fields(j, {"schema_version", "type", "family"});
            return doc;
        }
        if (doc.family == "AD") {
            detail::check_fields(j, {"schema_version", "type", "family", "m", "n"}, {"windows"});
            int m = detail::to_int(j.at("m"), "m"), n = detail::to_int(j.at("n"), "n");
            if (m < 1 || n < 1) throw SpecError("diamond orders must be positive");
            Region outer = build_aztec_rectangle(m, n);
            std::vector<Sq> removed;
            if (j.contains("windows")) {
                if (!j.at("windows").is_array()) throw SpecError("windows must be an array");
                for (const Json& wj : j.at("windows")) {
                    detail::check_fields(wj, {"shape"},
                                         {"n", "offset", "k", "l", "center2", "majority"});
                    if (!wj.at("shape").is_string()) throw SpecError("window shape must be a string");
                    std::string shape = wj.at("shape").get<std::string>();
                    DiamondWindow w;
                    if (shape == "AD") {
                        detail::check_fields(wj, {"shape", "n", "offset"});
                        w.is_ad = true;
                        w.n = detail::to_int(wj.at("n"), "window n");
                        if (w.n < 1) throw SpecError("window order must be positive");
                        std::tie(w.dx, w.dy) = detail::to_pair(wj.at("offset"), "window offset");
                    } else if (shape == "O") {
                        detail::check_fields(wj, {"shape", "k", "l", "center2", "majority"});
                        w.k = detail::to_int(wj.at("k"), "window k");
                        w.l = detail::to_int(wj.at("l"), "window l");
                        if (w.k < 0 || w.l < 0) throw SpecError("window parameters must be nonnegative");
                        std::tie(w.c2x, w.c2y) = detail::to_pair(wj.at("center2"), "window center2");
                        w.majority = detail::to_color(wj.at("majority"), "window majority");
                    } else {
                        throw SpecError("unknown window shape: " + shape);
                    }
                    for (Sq s : diamond_window_squares(w)) removed.push_back(s);
                }
            }
            doc.region = region_minus(outer, removed);
            return doc;
        }
        if (doc.family == "O") {
            detail::check_fields(j,
                                 {"schema_version", "type", "family", "k", "l", "center2", "majority"});
            int k = detail::to_int(j.at("k"), "k"), l = detail::to_int(j.at("l"), "l");
            if (k < 0 || l < 0) throw SpecError("odd rectangle parameters must be nonnegative");
            auto [c2x, c2y] = detail::to_pair(j.at("center2"), "center2");
            int majority = detail::to_color(j.at("majority"), "majority");
            doc.region = build_odd_aztec_rectangle(k, l, c2x, c2y, majority);
            return doc;
        }
        // Windowed families.
        doc.wfamily = family_from_name(doc.family);
        detail::check_fields(j, {"schema_version", "type", "family", "m", "k", "holes"});
        doc.wm = detail::to_int(j.at("m"), "m");
        doc.wk = detail::to_int(j.at("k"), "k");
        if (!j.at("holes").is_array() || j.at("holes").empty())
            throw SpecError("windowed spec needs a nonempty holes array");
        for (const Json& hj : j.at("holes")) {
            detail::check_fields(hj, {"a", "center2"});
            WindowSpec w;
            w.a = detail::to_int(hj.at("a"), "hole a");
            w.c2 = detail::to_int(hj.at("center2"), "hole center2");
            if (w.a < 1) throw SpecError("window width must be at least 1");
            doc.wholes.push_back(w);
        }
        doc.has_windowed = true;
        if (doc.wk == 0) {
            auto kept = window_kept_labels(doc.wfamily, doc.wm, doc.wholes);
            int a = window_label_width(doc.wholes);
            int n = family_is_wide(doc.wfamily) ? doc.wm + a : doc.wm - a;
            doc.region = build_r_region(family_variant(doc.wfamily), doc.wm, n, kept);
        } else {
            doc.region = windowed_region(doc.wfamily, doc.wm, doc.wk, doc.wholes);
        }
        return doc;
    }

    if (doc.type == "rgraph") {
        detail::check_fields(j, {"schema_version", "type", "variant", "m", "n", "T"});
        if (!j.at("variant").is_string()) throw SpecError("variant must be a string");
        doc.rvariant = rvariant_from_name(j.at("variant").get<std::string>());
        doc.rm = detail::to_int(j.at("m"), "m");
        doc.rn = detail::to_int(j.at("n"), "n");
        if (!j.at("T").is_array()) throw SpecError("T must be an array of labels");
        for (const Json& t : j.at("T")) doc.rkept.push_back(detail::to_int(t, "label"));
        doc.has_rgraph = true;
        doc.region = build_r_region(doc.rvariant, doc.rm, doc.rn, doc.rkept);
        return doc;
    }

    if (doc.type == "torus") {
        detail::check_fields(j, {"schema_version", "type", "m", "n"}, {"holes", "separations"});
        int m = detail::to_int(j.at("m"), "m"), n = detail::to_int(j.at("n"), "n");
        std::vector<TorusHole> holes;
        std::vector<TorusSep> seps;
        if (j.contains("holes")) {
            if (!j.at("holes").is_array()) throw SpecError("holes must be an array");
            for (const Json& hj : j.at("holes")) {
                detail::check_fields(hj, {"k", "l", "center2", "placement"});
                TorusHole h;
                h.k = detail::to_int(hj.at("k"), "hole k");
                h.l = detail::to_int(hj.at("l"), "hole l");
                if (h.k < 0 || h.l < 0) throw SpecError("hole parameters must be nonnegative");
                auto [c2x, c2y] = detail::to_pair(hj.at("center2"), "hole center2");
                if (c2x % 2 != 0 || c2y % 2 != 0)
                    throw SpecError("torus hole centers must have even doubled coordinates");
                h.cx = c2x / 2;
                h.cy = c2y / 2;
                h.placement = detail::to_color(hj.at("placement"), "hole placement");
                holes.push_back(h);
            }
        }
        if (j.contains("separations")) {
            if (!j.at("separations").is_array()) throw SpecError("separations must be an array");
            for (const Json& sj : j.at("separations")) {
                detail::check_fields(sj, {"axis", "at"});
                if (!sj.at("axis").is_string()) throw SpecError("separation axis must be \"v\" or \"h\"");
                std::string axis = sj.at("axis").get<std::string>();
                TorusSep sp;
                if (axis == "v")
                    sp.axis = 0;
                else if (axis == "h")
                    sp.axis = 1;
                else
                    throw SpecError("separation axis must be \"v\" or \"h\"");
                std::tie(sp.x, sp.y) = detail::to_pair(sj.at("at"), "separation anchor");
                seps.push_back(sp);
            }
        }
        doc.is_torus = true;
        doc.torus = build_torus(m, n, holes, seps);
        return doc;
    }

    throw SpecError("unknown spec type: " + doc.type);
}

inline Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        Json j;
        in >> j;
        return j;
    } catch (const Json::exception& e) {
        throw SpecError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

inline SpecDoc load_spec(const std::string& path) { return parse_spec(load_json(path)); }

inline Json emit_empty_spec() {
    Json j;
    j["schema_version"] = 1;
    j["type"] = "region";
    j["family"] = "empty";
    return j;
}

inline Json emit_diamond_spec(int m, int n, const std::vector<DiamondWindow>& windows = {}) {
    Json j;
    j["schema_version"] = 1;
    j["type"] = "region";
    j["family"] = "AD";
    j["m"] = m;
    j["n"] = n;
    if (!windows.empty()) {
        Json ws = Json::array();
        for (const DiamondWindow& w : windows) {
            Json wj;
            if (w.is_ad) {
                wj["shape"] = "AD";
                wj["n"] = w.n;
                wj["offset"] = Json::array({w.dx, w.dy});
            } else {
                wj["shape"] = "O";
                wj["k"] = w.k;
                wj["l"] = w.l;
                wj["center2"] = Json::array({w.c2x, w.c2y});
                wj["majority"] = detail::color_name(w.majority);
            }
            ws.push_back(wj);
        }
        j["windows"] = ws;
    }
    return j;
}

inline Json emit_odd_spec(int k, int l, int c2x, int c2y, int majority) {
    Json j;
    j["schema_version"] = 1;
    j["type"] = "region";
    j["family"] = "O";
    j["k"] = k;
    j["l"] = l;
    j["center2"] = Json::array({c2x, c2y});
    j["majority"] = detail::color_name(majority);
    return j;
}

inline Json emit_windowed_spec(Family f, int m, int k, const std::vector<WindowSpec>& holes) {
    Json j;
    j["schema_version"] = 1;
    j["type"] = "region";
    j["family"] = family_name(f);
    j["m"] = m;
    j["k"] = k;
    Json hs = Json::array();
    for (const WindowSpec& h : holes) {
        Json hj;
        hj["a"] = h.a;
        hj["center2"] = h.c2;
        hs.push_back(hj);
    }
    j["holes"] = hs;
    return j;
}

inline Json emit_rgraph_spec(RVariant v, int m, int n, const std::vector<int>& kept) {
    Json j;
    j["schema_version"] = 1;
    j["type"] = "rgraph";
    j["variant"] = rvariant_name(v);
    j["m"] = m;
    j["n"] = n;
    j["T"] = kept;
    return j;
}

inline Json emit_torus_spec(const TorusGraph& g) {
    Json j;
    j["schema_version"] = 1;
    j["type"] = "torus";
    j["m"] = g.m;
    j["n"] = g.n;
    Json hs = Json::array();
    for (const TorusHole& h : g.holes) {
        Json hj;
        hj["k"] = h.k;
        hj["l"] = h.l;
        hj["center2"] = Json::array({2 * h.cx, 2 * h.cy});
        hj["placement"] = detail::color_name(h.placement);
        hs.push_back(hj);
    }
    j["holes"] = hs;
    Json ss = Json::array();
    for (const TorusSep& s : g.seps) {
        Json sj;
        sj["axis"] = s.axis == 0 ? "v" : "h";
        sj["at"] = Json::array({s.x, s.y});
        ss.push_back(sj);
    }
    j["separations"] = ss;
    return j;
}

inline Json emit_graph(const MatchGraph& g) {
    Json j;
    j["schema_version"] = 1;
    j["type"] = "graph";
    Json vs = Json::array();
    for (size_t i = 0; i < g.verts.size(); ++i)
        vs.push_back(Json::array(
            {static_cast<int>(i), g.verts[i].x, g.verts[i].y, g.color(static_cast<int>(i))}));
    j["vertices"] = vs;
    Json es = Json::array();
    for (auto [u, v] : g.edges) es.push_back(Json::array({u, v}));
    j["edges"] = es;
    return j;
}

inline Json emit_torus_graph(const TorusGraph& g) {
    Json j;
    j["schema_version"] = 1;
    j["type"] = "torus_graph";
    j["m"] = g.m;
    j["n"] = g.n;
    Json vs = Json::array();
    for (size_t i = 0; i < g.verts.size(); ++i)
        vs.push_back(Json::array(
            {static_cast<int>(i), g.verts[i].i, g.verts[i].j, g.color(static_cast<int>(i))}));
    j["vertices"] = vs;
    Json es = Json::array();
    for (const auto& e : g.edges)
        es.push_back(Json::array({e.u, e.v, static_cast<int>(e.sx), static_cast<int>(e.sy)}));
    j["edges"] = es;
    return j;
}

inline Json emit_factorization(const Factorization& f) {
    Json j;
    Json fs = Json::array();
    for (const auto& [p, e] : f.factors) fs.push_back(Json::array({to_decimal(p), e}));
    j["factors"] = fs;
    j["cofactor"] = to_decimal(f.cofactor);
    return j;
}

inline Json emit_count(const Int& value, const std::string& engine) {
    Json j;
    j["schema_version"] = 1;
    j["type"] = "count";
    j["value"] = to_decimal(value);
    j["engine"] = engine;
    return j;
}

inline Json emit_completion(const Completion& c) {
    Json j;
    j["schema_version"] = 1;
    j["type"] = "completion";
    j["sigma"] = c.sigma;
    j["t"] = c.t_axis[0];
    Json cells = Json::array();
    for (Cell f : c.cells) cells.push_back(Json::array({f.i, f.j}));
    j["cells"] = cells;
    Json paths = Json::array();
    for (int axis : {0, 1})
        for (const CompletionPath& p : c.paths[axis]) {
            Json pj;
            pj["axis"] = p.axis == 0 ? "h" : "v";
            pj["ring"] = p.ring;
            pj["type"] = p.type;
            Json pc = Json::array();
            for (Cell f : p.cells) pc.push_back(Json::array({f.i, f.j}));
            pj["cells"] = pc;
            paths.push_back(pj);
        }
    j["paths"] = paths;
    Json xs = Json::array();
    for (Cell v : c.x_vertices) xs.push_back(Json::array({v.i, v.j}));
    j["x"] = xs;
    return j;
}

}  // namespace aztec
