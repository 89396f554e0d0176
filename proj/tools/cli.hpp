#ifndef POSTRIG_TOOLS_CLI_HPP
#define POSTRIG_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "postrig/trigeval.hpp"

namespace postrig::cli {

enum ExitCode : int
{
    exit_ok = 0,
    exit_usage = 1,
    exit_refuted = 2,
    exit_inconclusive = 3,
    exit_solver = 4,
    exit_io = 5
};

struct FamilyParams
{
    int n = -1;
    double alpha = 0.0;
    double beta = 0.0;
    double lambda = 1.0;
    double mu = 0.0;
    double b = 1.0;
    double c = 1.0;
    std::vector<double> coeffs;
    double shift = 0.0;
    int stride = 1;
};

/// Polynomial certified by `certify --family <name>`. Throws DomainError on
/// an unknown family or missing parameters.
TrigPolynomial build_family(const std::string& family, const FamilyParams& p);

/// Default upper end of the certification interval for a family.
double default_hi(const std::string& family, const FamilyParams& p);

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace postrig::cli

#endif
