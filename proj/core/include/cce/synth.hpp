#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cce/digraph.hpp"
#include "cce/graph.hpp"
#include "cce/shape.hpp"

namespace cce {

enum class RecognitionReason { AllGood, SingleNontrivialPath, NotPathsAndCycles, HoleForbidden };

std::string_view to_string(RecognitionReason reason);

struct RecognitionResult {
    bool answer = true;
    RecognitionReason reason = RecognitionReason::AllGood;

    friend bool operator==(const RecognitionResult&, const RecognitionResult&) = default;
};

/// Is the spec the CCE graph of some digraph with in/out-degree at most two?
/// Yes unless the spec has exactly one path component and it is nontrivial.
RecognitionResult recognize_22(const ComponentSpec& spec);
/// As above, and additionally interval: every cycle must be a triangle.
RecognitionResult recognize_22_interval(const ComponentSpec& spec);

/// Graph overloads; they answer NotPathsAndCycles instead of throwing.
RecognitionResult recognize_22(const UndirectedGraph& g);
RecognitionResult recognize_22_interval(const UndirectedGraph& g);

/// Rotation digraph on m vertices: arcs (k, k+t) and (k, k+t+1) for every k,
/// indices mod m. Its CCE graph is the cycle 1..m, with common prey of
/// (k, k+1) at k+t+1 and common predator at k-t.
/// Requires m >= 3 and 1 <= t <= m-2 (BadParameters otherwise).
Digraph build_rotation(int m, int t);

/// Realizes C_m. BadParameters if m < 3.
Digraph synth_cycle(int m);

/// Realizes P_m + P_n. Vertices 1..m form P_m; when m = 1 and n > 1 the
/// arguments are swapped first.
Digraph synth_two_paths(int m, int n);

/// Realizes 2P_m + P_n.
Digraph synth_twin_paths_plus(int m, int n);

/// Realizes P_l + P_m + P_n.
Digraph synth_three_paths(int l, int m, int n);

/// A witness digraph plus the human-readable construction steps.
struct Witness {
    Digraph digraph;
    std::vector<std::string> recipe;
};

/// Witness for an accepted spec: one rotation digraph per cycle, then the path
/// components grouped into pairs (plus a final triple when their count is odd),
/// largest first, all placed side by side. Throws NotRealizable for rejected specs.
Witness synthesize_witness(const ComponentSpec& spec);
Digraph synthesize(const ComponentSpec& spec);

}  // namespace cce
