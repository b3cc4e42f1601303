#pragma once

#include <string>

#include "aztec/brute.hpp"
#include "aztec/graph.hpp"
#include "aztec/kasteleyn.hpp"
#include "aztec/torus_count.hpp"

namespace aztec {

enum class Engine { automatic, brute, kasteleyn, torus };

inline Engine engine_from_name(const std::string& name) {
    if (name == "auto") return Engine::automatic;
    if (name == "brute") return Engine::brute;
    if (name == "kasteleyn") return Engine::kasteleyn;
    if (name == "torus") return Engine::torus;
    throw SpecError("unknown engine: " + name);
}

inline const char* engine_name(Engine e) {
    switch (e) {
        case Engine::automatic: return "auto";
        case Engine::brute: return "brute";
        case Engine::kasteleyn: return "kasteleyn";
        case Engine::torus: return "torus";
    }
    return "?";
}

inline Int count_matchings(const MatchGraph& g, Engine e = Engine::automatic, int guard = 48) {
    switch (e) {
        case Engine::brute: return count_matchings_brute(g, guard);
        case Engine::torus: throw EngineRefusal("torus engine requires a torus graph");
        default: return count_matchings_planar(g);
    }
}

inline Int count_region(const Region& r, Engine e = Engine::automatic, int guard = 48) {
    return count_matchings(dual_graph(r), e, guard);
}

inline Int count_torus(const TorusGraph& g, Engine e = Engine::automatic, int guard = 48) {
    switch (e) {
        case Engine::brute: return count_matchings_brute(g.adjacency(), guard);
        case Engine::kasteleyn: throw EngineRefusal("planar engine cannot count a torus");
        default: return count_matchings_torus(g);
    }
}

}  // namespace aztec
