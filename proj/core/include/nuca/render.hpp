#pragma once

#include <string>

#include "nuca/engine.hpp"

namespace nuca {

// One "t,state" line per time step.
std::string trace_to_csv(const Trace& tr);

// One "t,s0,s1,..." line per time step, columns in target order.
std::string evolution_to_csv(const Evolution& ev);

// Plain PGM (P2): rows are times 0..steps top to bottom, columns are the
// target cells, gray level floor(255*s/(q-1)). The byte layout is frozen;
// golden tests compare output verbatim.
std::string spacetime_to_pgm(const Evolution& ev);

void write_file(const std::string& path, const std::string& bytes);
std::string read_file(const std::string& path);

}  // namespace nuca
