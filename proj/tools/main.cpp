// ectrace command-line tool: computes the trace (conjugate sum under the
// group law) of a point on an elliptic curve defined over an exact field,
// for points given over a simple extension K[t]/T(t).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ectrace/document.hpp"
#include "ectrace/io.hpp"
#include "ectrace/oracle.hpp"
#include "ectrace/trace.hpp"

namespace {

constexpr const char* kVersion = "ectrace 0.1.0";

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ectrace::UsageError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const char* branch_name(ectrace::TraceBranch b) {
    switch (b) {
        case ectrace::TraceBranch::ConstantPoint: return "constant-point";
        case ectrace::TraceBranch::ConstantX: return "constant-x";
        case ectrace::TraceBranch::KernelVZero: return "kernel-v-zero";
        case ectrace::TraceBranch::TraceZero: return "trace-zero";
        case ectrace::TraceBranch::General: return "general";
    }
    return "?";
}

// Stable, line-oriented witness listing; fixtures diff this output verbatim.
void print_witness(std::ostream& os, const ectrace::TraceWitness& w) {
    using ectrace::format_matrix;
    using ectrace::format_point;
    using ectrace::format_polynomial;
    using ectrace::format_scalar;

    if (w.insep) {
        const auto& r = *w.insep;
        os << "insep.p: " << r.p << "\n";
        os << "insep.d: " << r.d << "\n";
        os << "insep.pd: " << r.pd << "\n";
        os << "insep.S: " << format_polynomial(r.sep_modulus, 't') << "\n";
        os << "insep.Q: " << format_point(r.q) << "\n";
        if (r.xq) os << "insep.xQ: " << format_polynomial(*r.xq, 't') << "\n";
        if (r.yq) os << "insep.yQ: " << format_polynomial(*r.yq, 't') << "\n";
    }
    if (w.sep) {
        const auto& r = *w.sep;
        os << "sep.modulus: " << format_polynomial(r.modulus, 't') << "\n";
        os << "sep.d: " << r.d << "\n";
        os << "sep.branch: " << branch_name(r.branch) << "\n";
        if (!r.basis_values.empty()) {
            os << "sep.L: [";
            for (std::size_t i = 0; i < r.basis_values.size(); ++i) {
                if (i) os << ", ";
                os << format_polynomial(r.basis_values[i].rep(), 't');
            }
            os << "]\n";
        }
        if (r.coefficient_matrix) os << "sep.M: " << format_matrix(*r.coefficient_matrix) << "\n";
        if (r.kernel) {
            os << "sep.kernel_dim: " << r.kernel->cols() << "\n";
            os << "sep.Z: [";
            for (std::size_t i = 0; i < r.relation.size(); ++i) {
                if (i) os << ", ";
                os << format_scalar(r.relation[i]);
            }
            os << "]\n";
        }
        if (r.u) os << "sep.U: " << format_polynomial(*r.u, 'x') << "\n";
        if (r.v) os << "sep.V: " << format_polynomial(*r.v, 'x') << "\n";
        if (r.x_min_poly) os << "sep.X: " << format_polynomial(*r.x_min_poly, 'x') << "\n";
        if (r.r) os << "sep.R: " << format_polynomial(*r.r, 'x') << "\n";
        if (r.s) os << "sep.S: " << format_polynomial(*r.s, 'x') << "\n";
        if (r.q) os << "sep.Q: " << format_point(*r.q) << "\n";
        if (r.branch == ectrace::TraceBranch::General) {
            os << "sep.dP: " << r.d_p << "\n";
            os << "sep.multiplier: " << r.multiplier << "\n";
        }
    }
    os << "result: " << format_point(w.result) << "\n";
}

int cmd_trace(const std::string& path, bool witness) {
    const std::string text = read_input(path);
    ectrace::ProblemDocument doc = ectrace::parse_problem_document(text);
    ectrace::TraceProblem problem = ectrace::build_problem(doc);
    ectrace::TraceWitness w = ectrace::trace(problem, witness);
    if (witness) {
        print_witness(std::cout, w);
    } else {
        std::cout << ectrace::format_point(w.result) << "\n";
    }
    return 0;
}

bool parse_degree_range(const std::string& text, unsigned& lo, unsigned& hi) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = static_cast<unsigned>(std::stoul(text));
        } else {
            lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
            hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 1 && lo <= hi;
}

int cmd_selftest(const ectrace::SelftestOptions& options) {
    std::cout << "selftest: chars=";
    for (std::size_t i = 0; i < options.characteristics.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << options.characteristics[i];
    }
    std::cout << " degrees=" << options.min_degree << ".." << options.max_degree
              << " count=" << options.count << " seed=" << options.seed << "\n";

    const ectrace::SelftestReport report = ectrace::run_selftest(options);
    for (const auto& pc : report.per_char) {
        std::cout << "char " << pc.characteristic << ": " << pc.instances
                  << " instances, mismatches=" << pc.mismatches
                  << ", branches trivial=" << pc.branch_trivial
                  << " v0=" << pc.branch_v_zero << " s0=" << pc.branch_trace_zero
                  << " general=" << pc.branch_general << "\n";
    }
    const bool covered = options.count == 0 || report.covered_all_branches();
    if (!covered) {
        std::cout << "branch coverage: INCOMPLETE\n";
    }
    if (!report.pass) {
        std::cout << "FAIL (" << report.total_instances() << " instances)\n";
        std::cout << "first counterexample (seed " << report.counterexample_seed
                  << "): " << report.counterexample << "\n";
        return 1;
    }
    std::cout << "PASS (" << report.total_instances() << " instances, 0 mismatches)\n";
    return covered ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact trace of elliptic-curve points over simple field extensions"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(0, 1);

    std::string input_path;
    bool witness = false;
    CLI::App* trace_cmd = app.add_subcommand("trace", "compute the trace of a problem file");
    trace_cmd->add_option("file", input_path, "problem document (JSON), or - for stdin")
        ->required();
    trace_cmd->add_flag("--witness", witness, "print the intermediate record");

    ectrace::SelftestOptions options;
    std::string chars_text = "2,3,5,7,101";
    std::string degrees_text = "2..12";
    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "differential test against the Frobenius oracle");
    selftest_cmd->add_option("--chars", chars_text, "comma-separated characteristics");
    selftest_cmd->add_option("--degrees", degrees_text, "modulus degree range, e.g. 2..12");
    selftest_cmd->add_option("--count", options.count, "instances per characteristic");
    selftest_cmd->add_option("--seed", options.seed, "base seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (trace_cmd->parsed()) return cmd_trace(input_path, witness);
        if (selftest_cmd->parsed()) {
            options.characteristics.clear();
            std::stringstream ss(chars_text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!item.empty()) options.characteristics.push_back(std::stoull(item));
            }
            if (options.characteristics.empty())
                throw ectrace::UsageError("--chars needs at least one characteristic");
            if (!parse_degree_range(degrees_text, options.min_degree, options.max_degree))
                throw ectrace::UsageError("--degrees must look like 2..12");
            return cmd_selftest(options);
        }
        std::cerr << app.help() << "\n";
        return 2;
    } catch (const ectrace::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
