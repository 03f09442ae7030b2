#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arithmaps/initial_space.hpp"
#include "arithmaps/proj.hpp"

namespace arithmaps {

// P2 (ASCII) PGM: finite value v maps to pixel r - v (0 prints near-white),
// infinity to 0 (black); maxval r. The comment line records the generating
// configuration so images are self-describing.
std::string pgm_p2(const std::vector<std::vector<ProjValue>>& grid, uint64_t r,
                   const std::string& comment);

std::string tsv_row(const std::vector<std::string>& cells);

// JSON export of a space: points with stratum tags, plus the step edges.
std::string omega_json(const OmegaSpace& space, bool with_edges);

// DOT orbit diagram: one node per point, one edge per step.
std::string omega_dot(const OmegaSpace& space, bool autonomous);

}  // namespace arithmaps
