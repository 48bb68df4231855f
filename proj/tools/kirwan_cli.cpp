#include "kirwan/config.hpp"
#include "kirwan/report.hpp"
#include "kirwan/svg.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGoldenMismatch = 1;
constexpr int kExitConfigError = 2;

struct Options {
    std::string config_path;
    int truncate = 0; // 0 = keep the configuration's order
    std::string format = "markdown";
    bool check = false;
    std::string out_path;
};

void write_output(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out)
        throw kirwan::ConfigError("cannot write to " + opt.out_path);
    out << text;
}

kirwan::PipelineConfig resolve_config(const Options& opt,
                                      kirwan::GroupCatalog& catalog) {
    kirwan::PipelineConfig cfg =
        opt.config_path.empty()
            ? kirwan::flagship_config()
            : kirwan::load_config_file(opt.config_path, catalog);
    if (opt.truncate > 0) cfg.truncation_order = opt.truncate;
    return cfg;
}

int cmd_strata(const Options& opt) {
    kirwan::GroupCatalog catalog = kirwan::GroupCatalog::builtin();
    const kirwan::PipelineConfig cfg = resolve_config(opt, catalog);
    kirwan::StratificationProblem problem;
    problem.ws = cfg.ws;
    problem.group = catalog.get(cfg.group);
    problem.chamber = cfg.chamber;
    problem.h_signs = cfg.h_signs;
    const kirwan::StrataResult res = kirwan::stratify(problem, catalog);
    write_output(opt, opt.format == "json"
                          ? kirwan::strata_to_json(res, cfg.truncation_order)
                                    .dump(2) +
                                "\n"
                          : kirwan::strata_to_markdown(res,
                                                       cfg.truncation_order));
    if (opt.check && !res.warnings.empty()) return kExitGoldenMismatch;
    return kExitOk;
}

int cmd_genus4(const Options& opt) {
    kirwan::GroupCatalog catalog = kirwan::GroupCatalog::builtin();
    const kirwan::PipelineConfig cfg = resolve_config(opt, catalog);
    std::vector<kirwan::CheckResult> golden;
    std::string body;
    try {
        const kirwan::PipelineReport report =
            kirwan::run_pipeline(cfg, catalog);
        golden = kirwan::golden_checks(report);
        body = opt.check ? kirwan::golden_summary(golden)
               : opt.format == "json"
                   ? kirwan::report_to_json(report).dump(2) + "\n"
                   : kirwan::report_to_markdown(report);
    } catch (const kirwan::ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        // A structurally impossible run is a golden failure, not a schema
        // error: report the diff and exit accordingly.
        golden.push_back({"pipeline completes", false, e.what()});
        body = kirwan::golden_summary(golden);
    }
    write_output(opt, body);
    if (!kirwan::all_pass(golden)) {
        if (!opt.check) std::cerr << kirwan::golden_summary(golden);
        return kExitGoldenMismatch;
    }
    return kExitOk;
}

int cmd_diagram(const Options& opt) {
    kirwan::GroupCatalog catalog = kirwan::GroupCatalog::builtin();
    const kirwan::PipelineConfig cfg = resolve_config(opt, catalog);
    const std::set<kirwan::Weight> index =
        kirwan::index_set(cfg.ws, cfg.chamber);
    write_output(opt, kirwan::diagram_svg(cfg.ws, cfg.chamber, index));
    return kExitOk;
}

int cmd_config(const Options& opt) {
    write_output(opt,
                 kirwan::config_to_json(kirwan::flagship_config()).dump(2) +
                     "\n");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact equivariant cohomology of GIT quotients: stratification, "
        "partial desingularization and intersection Betti numbers"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("--config", opt.config_path,
                        "configuration file (defaults to the built-in curve "
                        "model)");
        sub->add_option("--truncate", opt.truncate,
                        "series truncation order for displays")
            ->check(CLI::PositiveNumber);
        if (with_format)
            sub->add_option("--format", opt.format, "output format")
                ->check(CLI::IsMember({"json", "markdown"}));
        sub->add_flag("--check", opt.check,
                      "print one line per golden check");
        sub->add_option("--out", opt.out_path, "write output to a file");
    };

    CLI::App* strata =
        app.add_subcommand("strata", "stratification table and series");
    add_common(strata);
    CLI::App* genus4 = app.add_subcommand(
        "genus4", "full pipeline with golden checks (exit 1 on mismatch)");
    add_common(genus4);
    CLI::App* diagram =
        app.add_subcommand("diagram", "SVG of the weight diagram");
    add_common(diagram, false);
    CLI::App* config = app.add_subcommand(
        "config", "emit the built-in configuration as JSON");
    config->add_option("--out", opt.out_path, "write output to a file");

    try {
        app.parse(argc, argv);
        if (strata->parsed()) return cmd_strata(opt);
        if (genus4->parsed()) return cmd_genus4(opt);
        if (diagram->parsed()) return cmd_diagram(opt);
        if (config->parsed()) return cmd_config(opt);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    } catch (const kirwan::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}
