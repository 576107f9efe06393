#include "isorep/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <sstream>

#include "isorep/faithful.hpp"
#include "isorep/reports.hpp"

namespace isorep::cli {

namespace {

FiniteMetricSpace load_input(const RunConfig& config) {
    if (config.input_path.empty())
        throw Error("this command needs --input <space file>");
    return load_space(config.input_path,
                      format_from_extension(config.input_path));
}

std::vector<int> resolve_basepoints(const RunConfig& config,
                                    const FiniteMetricSpace& space) {
    if (config.basepoints) return *config.basepoints;
    std::vector<int> all(space.size());
    std::iota(all.begin(), all.end(), 0);
    return all;
}

NeighborhoodSpec resolve_spec(const RunConfig& config,
                              const FiniteMetricSpace& space) {
    NeighborhoodSpec spec = default_spec(space);
    if (config.basepoints) spec.basepoints = *config.basepoints;
    if (config.epsilon) spec.epsilon = *config.epsilon;
    return spec;
}

int emit(const RunConfig& config, std::ostream& out, const nlohmann::json& report,
         int code) {
    const std::string text = report.dump(2) + "\n";
    out << text;
    if (!config.output_path.empty()) {
        std::ofstream file(config.output_path);
        file << text;
        if (!file.good()) throw Error("cannot write " + config.output_path);
    }
    return code;
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
    nlohmann::json report = {{"command", "validate"}, {"input", config.input_path}};
    auto fail = [&](const std::string& axiom, std::vector<int> indices) {
        report["valid"] = false;
        report["violation"] = {{"axiom", axiom}, {"indices", std::move(indices)}};
        return emit(config, out, report, 1);
    };
    try {
        const FiniteMetricSpace space = load_input(config);
        report["valid"] = true;
        report["space"] = space_json(space);
        return emit(config, out, report, 0);
    } catch (const NotSymmetric& e) {
        return fail("NotSymmetric", {e.i, e.j});
    } catch (const NonzeroDiagonal& e) {
        return fail("NonzeroDiagonal", {e.i});
    } catch (const ZeroOffDiagonal& e) {
        return fail("ZeroOffDiagonal", {e.i, e.j});
    } catch (const TriangleViolation& e) {
        return fail("TriangleViolation", {e.i, e.j, e.k});
    }
}

int cmd_isometries(const RunConfig& config, std::ostream& out) {
    const FiniteMetricSpace space = load_input(config);
    const IsometryGroup group = isometry_group(space);
    nlohmann::json report = {{"command", "isometries"},
                             {"input", config.input_path},
                             {"space", space_json(space)},
                             {"group", group_json(group)}};
    return emit(config, out, report, 0);
}

int cmd_kernel_check(const RunConfig& config, std::ostream& out) {
    const KernelFunction kernel = resolve_kernel(config.kernel);
    nlohmann::json report = {{"command", "kernel-check"},
                             {"kernel",
                              {{"name", kernel.name()},
                               {"p0_is_one", kernel.unit_at_zero()},
                               {"max_abs_sampled", kernel.max_abs_sampled()}}}};

    if (!config.input_path.empty()) {
        const FiniteMetricSpace space = load_input(config);
        std::vector<int> all(space.size());
        std::iota(all.begin(), all.end(), 0);
        GramMatrix gram = gram_on_points(kernel, space, all);
        const PsdCertificate cert = check_psd(gram, config.tolerances.psd_tol);
        report["input"] = config.input_path;
        report["gram"] = gram_json(gram);
        report["pass"] = cert.is_psd;
        return emit(config, out, report, cert.is_psd ? 0 : 1);
    }

    // Without a space: the random-cloud PSD suite for the Gaussian kernel.
    if (kernel.name() != "gaussian")
        throw Error("the random-cloud suite runs on the gaussian kernel; "
                    "pass --input to check a table kernel on a space");
    nlohmann::json suites = nlohmann::json::array();
    bool all_pass = true;
    double min_eig = std::numeric_limits<double>::infinity();
    for (int k : config.cloud_dims)
        for (int n : config.cloud_sizes) {
            const LemmaPosReport r = verify_lemma_pos(k, n, config.trials,
                                                      config.seed,
                                                      config.tolerances.psd_tol);
            all_pass = all_pass && r.pass();
            min_eig = std::min(min_eig, r.min_eigenvalue_overall);
            suites.push_back(r);
        }
    report["suites"] = std::move(suites);
    report["min_eigenvalue_overall"] = min_eig;
    report["pass"] = all_pass;
    return emit(config, out, report, all_pass ? 0 : 1);
}

int cmd_bochner(const RunConfig& config, std::ostream& out) {
    const BochnerReport result =
        bochner_self_duality_check(config.grid, config.halfwidth, config.step);
    const bool pass = result.max_deviation <= config.bochner_tol &&
                      result.max_imag <= config.bochner_tol;
    nlohmann::json report = {{"command", "bochner"},
                             {"tolerance", config.bochner_tol},
                             {"result", result},
                             {"pass", pass}};
    return emit(config, out, report, pass ? 0 : 1);
}

int cmd_gns(const RunConfig& config, std::ostream& out) {
    const FiniteMetricSpace space = load_input(config);
    const KernelFunction kernel = resolve_kernel(config.kernel);
    const IsometryGroup group = isometry_group(space);
    const std::vector<int> basepoints = resolve_basepoints(config, space);
    const GroupKernel t = averaged_kernel(kernel, space, basepoints);

    nlohmann::json report = {{"command", "gns"},
                             {"input", config.input_path},
                             {"kernel", kernel.name()},
                             {"basepoints", basepoints},
                             {"group", group_json(group)}};
    try {
        const UnitaryRep rep = gns_build(group, t, config.tolerances.rank_tol,
                                         config.tolerances.psd_tol);
        report["rep"] = rep_json(rep);
        report["pass"] = true;
        return emit(config, out, report, 0);
    } catch (const NotPSD& e) {
        report["pass"] = false;
        report["error"] = {{"kind", "NotPSD"}, {"min_eigenvalue", e.min_eigenvalue}};
        return emit(config, out, report, 1);
    }
}

int cmd_separate(const RunConfig& config, std::ostream& out) {
    const FiniteMetricSpace space = load_input(config);
    const KernelFunction kernel = resolve_kernel(config.kernel);
    const IsometryGroup group = isometry_group(space);
    const NeighborhoodSpec spec = resolve_spec(config, space);
    const SeparationCertificate cert = separation_certificate(group, kernel, spec);
    nlohmann::json report = {{"command", "separate"},
                             {"input", config.input_path},
                             {"kernel", kernel.name()},
                             {"group", {{"order", group.order()}}},
                             {"certificate", certificate_json(cert, group)}};
    return emit(config, out, report, cert.pass ? 0 : 1);
}

int cmd_faithful(const RunConfig& config, std::ostream& out) {
    const FiniteMetricSpace space = load_input(config);
    const KernelFunction kernel = resolve_kernel(config.kernel);
    const IsometryGroup group = isometry_group(space);
    const std::vector<NeighborhoodSpec> specs = {resolve_spec(config, space)};
    const FaithfulResult result =
        faithful_representation(group, kernel, specs, config.tolerances.rank_tol);

    bool pass = result.report.injective;
    for (const FaithfulSpecReport& entry : result.report.specs)
        pass = pass && entry.certificate.pass && entry.transfer_pass;

    nlohmann::json report = {{"command", "faithful"},
                             {"input", config.input_path},
                             {"kernel", kernel.name()},
                             {"group", {{"order", group.order()}}},
                             {"faithfulness", faithfulness_json(result.report, group)},
                             {"rep", rep_json(result.rep)},
                             {"pass", pass}};
    return emit(config, out, report, pass ? 0 : 1);
}

int cmd_report(const RunConfig& config, std::ostream& out) {
    const FiniteMetricSpace space = load_input(config);
    const KernelFunction kernel = resolve_kernel(config.kernel);
    const IsometryGroup group = isometry_group(space);

    std::vector<int> all(space.size());
    std::iota(all.begin(), all.end(), 0);
    GramMatrix gram = gram_on_points(kernel, space, all);
    const PsdCertificate psd = check_psd(gram, config.tolerances.psd_tol);

    const NeighborhoodSpec spec = resolve_spec(config, space);
    const SeparationCertificate cert = separation_certificate(group, kernel, spec);

    const std::vector<NeighborhoodSpec> specs = {spec};
    const FaithfulResult result =
        faithful_representation(group, kernel, specs, config.tolerances.rank_tol);

    bool faithful_pass = result.report.injective;
    for (const FaithfulSpecReport& entry : result.report.specs)
        faithful_pass = faithful_pass && entry.certificate.pass && entry.transfer_pass;
    const bool pass = psd.is_psd && cert.pass && faithful_pass;

    nlohmann::json report = {
        {"command", "report"},
        {"input", config.input_path},
        {"kernel",
         {{"name", kernel.name()},
          {"p0_is_one", kernel.unit_at_zero()},
          {"max_abs_sampled", kernel.max_abs_sampled()}}},
        {"space", space_json(space)},
        {"group", group_json(group)},
        {"gram", gram_json(gram)},
        {"separation", certificate_json(cert, group)},
        {"faithfulness", faithfulness_json(result.report, group)},
        {"rep", {{"dim", result.rep.dim()},
                 {"certificates", result.rep.certificates()}}},
        {"pass", pass}};
    return emit(config, out, report, pass ? 0 : 1);
}

}  // namespace

KernelFunction resolve_kernel(const std::string& kernel_arg) {
    if (kernel_arg == "gaussian") return KernelFunction::gaussian();
    const std::string prefix = "table:";
    if (kernel_arg.rfind(prefix, 0) != 0)
        throw Error("unknown kernel \"" + kernel_arg +
                    "\"; expected gaussian or table:<path>");
    const std::string path = kernel_arg.substr(prefix.size());
    std::ifstream in(path);
    if (!in) throw Error("cannot open kernel table " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ":byte " + std::to_string(e.byte), e.what());
    }
    if (!doc.is_array())
        throw ParseError(path, "expected a JSON array of [distance, value] pairs");
    std::vector<std::pair<double, double>> entries;
    for (const auto& pair : doc) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
            !pair[1].is_number())
            throw ParseError(path, "expected [distance, value] pairs");
        entries.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return KernelFunction::from_table(std::move(entries), "table");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::Validate: return cmd_validate(config, out);
            case Command::Isometries: return cmd_isometries(config, out);
            case Command::KernelCheck: return cmd_kernel_check(config, out);
            case Command::Bochner: return cmd_bochner(config, out);
            case Command::Gns: return cmd_gns(config, out);
            case Command::Separate: return cmd_separate(config, out);
            case Command::Faithful: return cmd_faithful(config, out);
            case Command::Report: return cmd_report(config, out);
        }
        err << "error: unknown command\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

int run(const RunConfig& config) { return run(config, std::cout, std::cerr); }

namespace {

std::optional<std::vector<int>> parse_basepoints(const std::string& arg) {
    if (arg.empty() || arg == "all") return std::nullopt;
    std::vector<int> out;
    std::stringstream ss(arg);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(cell, &pos);
            if (pos != cell.size()) throw std::invalid_argument("junk");
            out.push_back(v);
        } catch (const std::exception&) {
            throw Error("cannot parse basepoint \"" + cell +
                        "\"; expected indices like 0,2,5 or 'all'");
        }
    }
    if (out.empty()) throw Error("empty basepoint list");
    return out;
}

}  // namespace

int main_cli(int argc, const char* const* argv) {
    CLI::App app{"certified unitary representations of isometry groups of "
                 "finite metric spaces"};
    app.require_subcommand(1);

    RunConfig config;
    std::string basepoints_arg = "all";

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        auto* input = sub->add_option("--input", config.input_path,
                                      "metric space file (.json or .csv)");
        if (needs_input) input->required();
        sub->add_option("--kernel", config.kernel, "gaussian | table:<path>");
        sub->add_option("--epsilon", config.epsilon,
                        "neighborhood radius (default: half the minimum distance)");
        sub->add_option("--basepoints", basepoints_arg,
                        "comma-separated point indices, or 'all'");
        sub->add_option("--seed", config.seed, "random seed");
        sub->add_option("--psd-tol", config.tolerances.psd_tol,
                        "relative PSD tolerance");
        sub->add_option("--rank-tol", config.tolerances.rank_tol,
                        "relative rank cutoff for the GNS quotient");
        sub->add_option("--output", config.output_path, "write the report here too");
    };

    auto* validate = app.add_subcommand("validate", "check the metric axioms");
    add_common(validate, true);
    auto* isometries =
        app.add_subcommand("isometries", "enumerate the isometry group");
    add_common(isometries, true);
    auto* kernel_check = app.add_subcommand(
        "kernel-check",
        "certify the kernel Gram matrix on a space, or (without --input) run "
        "the seeded random-cloud PSD suite");
    add_common(kernel_check, false);
    kernel_check->add_option("--trials", config.trials,
                             "clouds per (dim, size) combination");
    auto* bochner = app.add_subcommand(
        "bochner", "verify the Gaussian Fourier self-duality numerically");
    add_common(bochner, false);
    bochner->add_option("--halfwidth", config.halfwidth, "truncation halfwidth");
    bochner->add_option("--step", config.step, "trapezoid step");
    bochner->add_option("--tol", config.bochner_tol, "pass tolerance");
    bochner->add_option("--grid", config.grid, "evaluation points");
    auto* gns = app.add_subcommand(
        "gns", "build the GNS representation of the averaged kernel");
    add_common(gns, true);
    auto* separate = app.add_subcommand(
        "separate", "certify the separation bound for one neighborhood");
    add_common(separate, true);
    auto* faithful = app.add_subcommand(
        "faithful", "build and certify an injective representation");
    add_common(faithful, true);
    auto* full_report =
        app.add_subcommand("report", "run the whole pipeline on a space");
    add_common(full_report, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (validate->parsed()) config.command = Command::Validate;
    else if (isometries->parsed()) config.command = Command::Isometries;
    else if (kernel_check->parsed()) config.command = Command::KernelCheck;
    else if (bochner->parsed()) config.command = Command::Bochner;
    else if (gns->parsed()) config.command = Command::Gns;
    else if (separate->parsed()) config.command = Command::Separate;
    else if (faithful->parsed()) config.command = Command::Faithful;
    else config.command = Command::Report;

    try {
        config.basepoints = parse_basepoints(basepoints_arg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    return run(config);
}

}  // namespace isorep::cli
