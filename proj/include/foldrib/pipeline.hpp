#pragma once

// The whole construction for one diagram, with its internal checks, and the
// stage-by-stage knot-type verification.

#include <string>
#include <vector>

#include "foldrib/bound.hpp"
#include "foldrib/laurent.hpp"
#include "foldrib/layout.hpp"
#include "foldrib/leveling.hpp"
#include "foldrib/model.hpp"

namespace foldrib {

struct PipelineOptions {
    bool exhaustive = false;
    int bracket_cap = 14;
};

struct PipelineResult {
    PlanarDiagram input;
    LeveledDiagram leveling;  // as found
    LeveledDiagram flipped;   // after optimize_flips
    FlipChoice flip;
    BinaryGridDiagram expanded;
    BinaryGridDiagram normal;
    FoldSchedule schedule;
    BoundReport report;
};

/// Runs leveling, flips, expansion, rewriting and the pile. Throws the
/// precondition errors of require_pipeline_input, and InternalCheck when a
/// stage breaks one of its invariants. Zero-crossing input gives bound 0.
PipelineResult run_pipeline(const PlanarDiagram& d, const std::string& name = "", const PipelineOptions& options = {});

/// Pipeline starting from a grid diagram: rewriting and the pile only.
PipelineResult run_grid_pipeline(const BinaryGridDiagram& g, const std::string& name = "");

struct StageCheck {
    std::string stage;
    bool ok = false;
    std::string jones;
};

struct VerifyReport {
    std::string reference;
    std::vector<StageCheck> stages;
    bool ok() const;
};

/// Normalized Jones polynomial at every stage compared with the input's.
/// With per_step every single rewrite step is checked.
VerifyReport verify_stages(const PlanarDiagram& d, bool per_step, const PipelineOptions& options = {});

/// The same for a grid diagram input: rewriting steps and the layout core.
VerifyReport verify_grid_stages(const BinaryGridDiagram& g, bool per_step, const PipelineOptions& options = {});

nlohmann::json to_json(const VerifyReport& v);

}  // namespace foldrib
