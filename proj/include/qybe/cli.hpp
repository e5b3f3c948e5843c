#pragma once

#include <string>
#include <vector>

#include "qybe/json_io.hpp"

namespace qybe::cli {

/// Entry point used by the qybe binary; returns the process exit status.
/// A "false" verdict is a successful run (exit 0); nonzero is reserved for
/// usage, I/O and parse failures.
int run(int argc, const char* const* argv);

// Command implementations, exposed for in-process testing. Each returns the
// JSON report the command writes.

Json cmd_check_qybe(const std::string& quiver_path);
Json cmd_classify(const std::string& quiver_path);
Json cmd_kron_square(const std::string& quiver_path);
Json cmd_census(const std::string& mode, std::size_t max_vertices);
Json cmd_groupoid(const std::string& components_spec);
Json cmd_build_tl(const std::string& b_matrix_path);
Json cmd_build_hecke(const std::string& tl_path);
Json cmd_standard_r(std::size_t n);
Json cmd_projection_r(const std::string& p_matrix_path);
Json cmd_verify(const std::string& r_matrix_path, std::size_t n, bool hecke,
                bool braid, const std::vector<std::string>& q0_samples);
Json cmd_rtt(const std::string& r_matrix_path, const std::string& layout,
             const std::vector<std::string>& gens);
Json cmd_frt(std::size_t n);
Json cmd_leavitt(const std::string& quiver_path,
                 const std::vector<std::string>& assignments);

/// Parses a groupoid component spec like "1,2;3" into size lists.
std::vector<std::vector<long>> parse_components_spec(const std::string& spec);

}  // namespace qybe::cli
