// sicmub-cli: build MUBs and SICs, run bound-verification campaigns.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sicmub/commands.hpp"
#include "sicmub/errors.hpp"
#include "sicmub/io.hpp"

namespace {

using namespace sicmub;

std::optional<ComplexVector> read_fiducial(const std::string &path) {
    if (path.empty()) {
        return std::nullopt;
    }
    auto f = load_fiducial(path);
    if (std::abs(f.rescale - 1.0) > 1e-12) {
        std::cerr << "note: fiducial rescaled by " << format_number(f.rescale)
                  << " to unit norm\n";
    }
    return std::move(f.ket);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"MUB / SIC-POVM construction and entropic bound verification"};
    app.require_subcommand(1);

    std::size_t mub_dim = 2;
    std::size_t mub_count = 0;
    auto *mub = app.add_subcommand("mub", "construct and verify a MUB set");
    mub->add_option("--dim", mub_dim, "prime dimension")->required();
    mub->add_option("--count", mub_count, "number of bases (default d+1)");

    std::vector<std::size_t> dims{2, 3};
    std::vector<std::string> props{"all"};
    std::vector<std::string> alphas;
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    std::optional<double> eta;
    double tolerance = 1e-10;
    std::optional<std::size_t> count;
    std::string out_path;
    std::string format = "csv";
    std::string fiducial_path;

    auto *verify = app.add_subcommand("verify", "run a Monte-Carlo bound campaign");
    verify->add_option("--dim", dims, "dimensions, comma separated")->delimiter(',');
    verify->add_option("--props", props, "proposition labels or 'all'")->delimiter(',');
    verify->add_option("--alphas", alphas, "orders, comma separated; 'inf' allowed")
        ->delimiter(',');
    verify->add_option("--samples", samples, "random states per dimension");
    verify->add_option("--seed", seed, "campaign seed");
    verify->add_option("--eta", eta, "detector efficiency for P1/P6");
    verify->add_option("--tolerance", tolerance, "margin tolerance");
    verify->add_option("--count", count, "number of MUBs (default d+1)");
    verify->add_option("--out", out_path, "report path (default stdout)");
    verify->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--fiducial", fiducial_path, "fiducial ket JSON file");

    std::size_t coin_dim = 2;
    std::string state = "mixed";
    std::uint64_t coin_seed = 0;
    std::string coin_fiducial;
    auto *coin = app.add_subcommand("coincidence", "SIC index of coincidence check");
    coin->add_option("--dim", coin_dim, "dimension")->required();
    coin->add_option("--state", state,
                     "mixed | random-pure | random-mixed | <density matrix JSON>");
    coin->add_option("--seed", coin_seed, "seed for random states");
    coin->add_option("--fiducial", coin_fiducial, "fiducial ket JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUnsupported;
    }

    try {
        if (*mub) {
            return cmd_mub(mub_dim, mub_count == 0 ? mub_dim + 1 : mub_count,
                           std::cout, std::cerr);
        }
        if (*verify) {
            CampaignConfig config;
            config.dims = dims;
            if (props.size() == 1 && props.front() == "all") {
                config.props = all_propositions();
            } else {
                for (const auto &p : props) {
                    config.props.push_back(parse_proposition(p));
                }
            }
            for (const auto &a : alphas) {
                config.alphas.push_back(EntropyOrder::parse(a));
            }
            config.samples = samples;
            config.seed = seed;
            config.eta = eta;
            config.tolerance = tolerance;
            config.count = count;
            config.fiducial = read_fiducial(fiducial_path);
            VerifyOutput output;
            if (!out_path.empty()) {
                output.path = out_path;
            }
            output.format = format == "json" ? ReportFormat::json : ReportFormat::csv;
            return cmd_verify(config, output, std::cout, std::cerr);
        }
        return cmd_coincidence(coin_dim, StateSource{state, coin_seed},
                               read_fiducial(coin_fiducial), std::cout, std::cerr);
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnsupported;
    }
}
