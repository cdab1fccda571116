/*
   Copyright 2026 The screwline Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command line front end. Exit codes: 0 when every check passes, 1 when a
// check or a validation fails, 2 on malformed input.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "screwline/classical.hpp"
#include "screwline/examples.hpp"
#include "screwline/json_io.hpp"
#include "screwline/paleywiener.hpp"
#include "screwline/pipeline.hpp"

using namespace screwline;
using json_io::json;

namespace {

struct Common {
    std::uint64_t seed = 0;
    std::optional<double> tol;
    std::string out;
};

void emit(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw json_io::SchemaError("cannot write '" + out + "'");
    f << j.dump(2) << "\n";
}

int emit_report(const json_io::VerificationReport& r, const std::string& out) {
    emit(json_io::to_json(r), out);
    for (const auto& c : r.checks)
        if (!c.pass) std::cerr << "FAIL " << r.name << ": " << c.name << (c.message.empty() ? "" : " (" + c.message + ")") << "\n";
    return r.pass() ? 0 : 1;
}

/// Failure of the input itself maps to 2, a failed mathematical validation to 1.
template <class F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const json_io::SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Screw functions, de Branges spaces and canonical systems"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--seed", common.seed, "Seed for all randomized sampling");
    app.add_option("--tol", common.tol, "Tolerance of the floating point identities");
    app.add_option("--out", common.out, "Output file (default: stdout)");

    PipelineOptions po;
    std::vector<double> range;

    auto* pipeline = app.add_subcommand("pipeline", "Run a full example chain and emit its report");
    std::string example = "g0";
    pipeline->add_option("--example", example, "g0 or pw")->check(CLI::IsMember({"g0", "pw"}));
    pipeline->add_option("--r", po.r, "Paley-Wiener parameter r");
    pipeline->add_option("--trunc", po.trunc, "Paley-Wiener truncation N");
    pipeline->add_option("--grid", po.grid, "Points of the positive definiteness grid");
    pipeline->add_option("--range", range, "Interval of the positive definiteness grid")->expected(2);

    auto* factorize_cmd = app.add_subcommand("factorize", "Factorize a transfer matrix W.json into a Hamiltonian");
    std::string input;
    factorize_cmd->add_option("input", input, "W.json")->required()->check(CLI::ExistingFile);

    auto* string_cmd = app.add_subcommand("string", "Krein string of a Stieltjes function q.json");
    bool from_Q = false;
    string_cmd->add_option("input", input, "q.json")->required()->check(CLI::ExistingFile);
    string_cmd->add_flag("--from-Q", from_Q, "Input is an odd Q; use q(z) = Q(sqrt z)/sqrt z");

    auto* pd = app.add_subcommand("pd-check", "Smallest eigenvalue of the kernel matrix of a screw function");
    std::string screw_file;
    std::string pd_example = "g0";
    pd->add_option("--grid", po.grid, "Number of grid points");
    pd->add_option("--range", range, "Grid interval lo hi")->expected(2);
    pd->add_option("--in", screw_file, "Screw function JSON {g0, c, tau}")->check(CLI::ExistingFile);
    pd->add_option("--example", pd_example, "Built-in screw function")->check(CLI::IsMember({"g0"}));

    auto* pw = app.add_subcommand("pw", "Paley-Wiener checks");
    pw->add_option("--r", po.r, "r > 0");
    pw->add_option("--trunc", po.trunc, "Truncation N >= 1");

    auto* appendix = app.add_subcommand("appendix-checks", "Krein string, Levy-Khintchine and mean periodicity checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    po.seed = common.seed;
    po.tol = common.tol;
    if (range.size() == 2) {
        po.range_lo = range[0];
        po.range_hi = range[1];
    }

    auto pw_report = [&] {
        try {
            PWFrame{po.r, po.trunc}.validate();
        } catch (const std::invalid_argument& e) {
            throw json_io::SchemaError(e.what());
        }
        return emit_report(pw_pipeline(po), common.out);
    };
    if (*pipeline) return guarded([&] { return example == "g0" ? emit_report(g0_pipeline(po), common.out) : pw_report(); });
    if (*pw) return guarded(pw_report);
    if (*appendix) return guarded([&] { return emit_report(appendix_checks(po), common.out); });

    if (*factorize_cmd) {
        return guarded([&] {
            MatrixPolynomial W = json_io::matrix_polynomial_from_json(json_io::read_file(input));
            TransferReport v = validate_transfer(W, 64, common.seed);
            if (!v.pass) {
                for (const auto& f : v.failures) std::cerr << "not a transfer matrix: " << f << "\n";
                return 1;
            }
            emit(json_io::to_json(factorize(W)), common.out);
            return 0;
        });
    }
    if (*string_cmd) {
        return guarded([&] {
            RationalFunction q = json_io::rational_function_from_json(json_io::read_file(input));
            if (from_Q) q = q_substitute(q);
            emit(json_io::to_json(stieltjes_string(q)), common.out);
            return 0;
        });
    }
    if (*pd) {
        return guarded([&] {
            ScrewFunctionData g = screw_file.empty() ? g0_data() : json_io::screw_from_json(json_io::read_file(screw_file));
            if (po.grid < 1) throw json_io::SchemaError("--grid must be positive");
            std::vector<double> grid;
            for (int k = 0; k < po.grid; ++k)
                grid.push_back(po.grid == 1 ? po.range_lo : po.range_lo + (po.range_hi - po.range_lo) * k / (po.grid - 1));
            PdResult r = pd_check(g, grid, common.tol.value_or(1e-9));
            emit(json{{"min_eigenvalue", r.min_eigenvalue}, {"pass", r.pass}}, common.out);
            return r.pass ? 0 : 1;
        });
    }
    return 2;
}
