// akcores command line: single-shot queries (weight, core, tau, tau-inverse,
// is-core) and block table generation. Data goes to stdout (or --out),
// diagnostics to stderr. Exit codes: 0 ok, 2 parse error, 3 domain error,
// 4 unwritable output path.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "akcores/blocks.hpp"
#include "akcores/io.hpp"
#include "akcores/partitions.hpp"
#include "akcores/uglov.hpp"
#include "akcores/weights.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitOutput = 4;

struct Options {
    akcores::Int e = 0;
    std::string charge;
    std::string mp;
    std::string p;
    akcores::Int charge_total = 0;
    akcores::Int n = 0;
    int l = 0;
    std::string format;
    std::string out;
};

int emit(const std::string& data, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << data;
        return kExitOk;
    }
    std::ofstream file(out_path);
    if (!file) {
        std::cerr << "akcores: cannot open output path: " << out_path << "\n";
        return kExitOutput;
    }
    file << data;
    if (!file.flush()) {
        std::cerr << "akcores: failed writing output path: " << out_path << "\n";
        return kExitOutput;
    }
    return kExitOk;
}

std::string default_format() {
    const char* env = std::getenv("AKCORES_FORMAT");
    return env && *env ? env : "json";
}

nlohmann::json sigma_json(const std::vector<int>& sigma) {
    return nlohmann::json(sigma);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace akcores;

    CLI::App app{"Cores, weights and blocks of charged multipartitions"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_mp) {
        cmd->add_option("--e", opt.e, "modulus e (integer >= 2)")->required();
        cmd->add_option("--charge", opt.charge, "multicharge, comma separated")->required();
        if (needs_mp)
            cmd->add_option("--mp", opt.mp, "multipartition as nested JSON arrays")->required();
        cmd->add_option("--out", opt.out, "write output to this path instead of stdout");
    };

    auto* weight_cmd = app.add_subcommand("weight", "block weight of a multipartition");
    add_common(weight_cmd, true);
    auto* core_cmd = app.add_subcommand("core", "core, core charge and weight");
    add_common(core_cmd, true);
    auto* tau_cmd = app.add_subcommand("tau", "interleaved level-1 image");
    add_common(tau_cmd, true);
    auto* iscore_cmd = app.add_subcommand("is-core", "core predicate");
    add_common(iscore_cmd, true);

    auto* tauinv_cmd = app.add_subcommand("tau-inverse", "pull a charged partition back to level l");
    tauinv_cmd->add_option("--e", opt.e, "modulus e (integer >= 2)")->required();
    tauinv_cmd->add_option("--l", opt.l, "target level")->required();
    tauinv_cmd->add_option("--charge-total", opt.charge_total, "charge of the level-1 abacus")->required();
    tauinv_cmd->add_option("--p", opt.p, "partition as a JSON array")->required();
    tauinv_cmd->add_option("--out", opt.out, "write output to this path instead of stdout");

    auto* blocks_cmd = app.add_subcommand("blocks", "block table for all l-partitions of n");
    blocks_cmd->add_option("--n", opt.n, "rank")->required();
    blocks_cmd->add_option("--l", opt.l, "level")->required();
    blocks_cmd->add_option("--e", opt.e, "modulus e (integer >= 2)")->required();
    blocks_cmd->add_option("--charge", opt.charge, "multicharge, comma separated")->required();
    blocks_cmd->add_option("--format", opt.format, "json, csv or md (default: $AKCORES_FORMAT or json)");
    blocks_cmd->add_option("--out", opt.out, "write output to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) return app.exit(ex);  // --help
        app.exit(ex);
        return kExitParse;
    }

    try {
        nlohmann::json reply;
        std::string data;

        if (app.got_subcommand(weight_cmd)) {
            Multipartition mp = parse_multipartition(opt.mp);
            Multicharge s = parse_charge_list(opt.charge);
            reply["weight"] = block_weight(mp, s, opt.e);
            data = reply.dump() + "\n";
        } else if (app.got_subcommand(core_cmd)) {
            Multipartition mp = parse_multipartition(opt.mp);
            Multicharge s = parse_charge_list(opt.charge);
            CoreDescriptor core = core_by_ops(mp, s, opt.e);
            reply["core"] = to_json(core.core);
            reply["charge"] = nlohmann::json(core.charge);
            reply["weight"] = core.weight;
            reply["sigma"] = sigma_json(core.sigma);
            data = reply.dump() + "\n";
        } else if (app.got_subcommand(tau_cmd)) {
            Multipartition mp = parse_multipartition(opt.mp);
            Multicharge s = parse_charge_list(opt.charge);
            if (s.size() != static_cast<size_t>(mp.level()))
                throw std::domain_error("multipartition and multicharge lengths differ");
            auto [image, total] = tau(mp, s, opt.e);
            reply["partition"] = to_json(image);
            reply["charge"] = total;
            data = reply.dump() + "\n";
        } else if (app.got_subcommand(iscore_cmd)) {
            Multipartition mp = parse_multipartition(opt.mp);
            Multicharge s = parse_charge_list(opt.charge);
            reply["is_core"] = is_core(mp, s, opt.e);
            data = reply.dump() + "\n";
        } else if (app.got_subcommand(tauinv_cmd)) {
            if (opt.l < 1) throw std::domain_error("level must be >= 1");
            Partition p = parse_partition(opt.p);
            auto [mp, charge] = tau_inverse(p, opt.charge_total, opt.l, opt.e);
            reply["multipartition"] = to_json(mp);
            reply["charge"] = nlohmann::json(charge);
            data = reply.dump() + "\n";
        } else if (app.got_subcommand(blocks_cmd)) {
            if (opt.n < 0) throw std::domain_error("rank must be >= 0");
            if (opt.l < 1) throw std::domain_error("level must be >= 1");
            Multicharge s = parse_charge_list(opt.charge);
            TableFormat fmt = parse_table_format(opt.format.empty() ? default_format() : opt.format);
            auto table = decompose_blocks(opt.n, opt.l, opt.e, s);
            data = render_block_table(table, opt.n, opt.l, opt.e, s, fmt);
        }

        return emit(data, opt.out);
    } catch (const ParseError& ex) {
        std::cerr << "akcores: parse error: " << ex.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& ex) {
        std::cerr << "akcores: " << ex.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "akcores: " << ex.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& ex) {
        std::cerr << "akcores: internal error: " << ex.what() << "\n";
        return kExitDomain;
    }
}
