#pragma once

#include <ostream>
#include <string>
#include <vector>

// Built-in verification suites with timing, as run by `grushin verify`.
namespace grushin::verify {

struct Check {
    std::string what;
    double value = 0.0;
    double bound = 0.0;
    bool upper = true;  // value < bound; otherwise value > bound
    bool pass() const;
};

struct Result {
    std::string id;     // criterion number, or a module check label
    std::string suite;  // module it exercises
    std::string title;
    std::vector<Check> checks;
    std::string error;  // exception text when the run threw
    double seconds = 0.0;
    bool pass() const;
};

// all, specfun, hankel, laguerre, gtransform, heat, diffop
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// tol_scale multiplies the error bounds; order and separation bounds are fixed.
// Throws DomainError for an unknown suite or tol_scale <= 0.
std::vector<Result> run_suite(const std::string& suite, double tol_scale = 1.0);

void print_table(std::ostream& os, const std::vector<Result>& results);
bool all_pass(const std::vector<Result>& results);

}  // namespace grushin::verify
