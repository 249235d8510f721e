// Command-line front end: corpus generation, verification runs, and
// invariant inspection over exact rational quadratic-form data.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlat/errors.hpp"
#include "qlat/invariants.hpp"
#include "qlat/verify.hpp"

using json = nlohmann::ordered_json;
using namespace qlat;

namespace {

constexpr const char* kVersion = "1.0.0";

RatMat gram_from_json(const json& rows) {
    if (!rows.is_array() || rows.empty()) throw InvalidInput("gram must be an array of rows");
    std::vector<Vec> out;
    for (const auto& row : rows) {
        if (!row.is_array()) throw InvalidInput("gram row must be an array");
        Vec v;
        for (const auto& cell : row) {
            if (!cell.is_string()) throw InvalidInput("matrix entries must be rational strings");
            v.push_back(parse_rat(cell.get<std::string>()));
        }
        out.push_back(v);
    }
    return RatMat::from_rows(out);
}

Vec vec_from_json(const json& arr) {
    if (!arr.is_array()) throw InvalidInput("vector must be an array");
    Vec v;
    for (const auto& cell : arr) {
        if (!cell.is_string()) throw InvalidInput("vector entries must be rational strings");
        v.push_back(parse_rat(cell.get<std::string>()));
    }
    return v;
}

json matrix_to_json(const RatMat& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json vec_to_json(const Vec& v) {
    json arr = json::array();
    for (const Rat& x : v) arr.push_back(rat_str(x));
    return arr;
}

struct InputInstance {
    RatMat gram;
    Vec h;
    std::optional<RatMat> lattice;
};

std::vector<InputInstance> load_instances(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.contains("instances") || !doc["instances"].is_array())
        throw InvalidInput("file must contain an \"instances\" array");
    std::vector<InputInstance> out;
    try {
        for (const auto& item : doc["instances"]) {
            InputInstance ii{gram_from_json(item.at("gram")), vec_from_json(item.at("h")),
                             std::nullopt};
            if (item.contains("lattice")) ii.lattice = gram_from_json(item["lattice"]);
            out.push_back(std::move(ii));
        }
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("bad instance record: ") + e.what());
    }
    return out;
}

int cmd_gen(std::uint64_t seed, size_t count, const CorpusOptions& opts,
            const std::string& outpath) {
    auto corpus = gen_corpus(seed, count, opts);
    json doc;
    doc["instances"] = json::array();
    for (const auto& e : corpus) {
        json item;
        item["gram"] = matrix_to_json(e.gram);
        item["h"] = vec_to_json(e.h);
        doc["instances"].push_back(item);
    }
    if (outpath.empty() || outpath == "-") {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(outpath);
        if (!out) throw InvalidInput("cannot write " + outpath);
        out << doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_verify(const std::vector<InputInstance>& inputs, std::uint64_t seed,
               const std::string& report_path, bool quiet, json meta) {
    Rng rng(seed ^ 0x5EEDULL);
    json results = json::array();
    bool all_pass = true;
    for (size_t id = 0; id < inputs.size(); ++id) {
        auto t0 = std::chrono::steady_clock::now();
        Instance inst = build_instance(inputs[id].gram, inputs[id].h, inputs[id].lattice);
        auto checks = run_all_checks(inst, rng);
        json jchecks = json::array();
        for (const auto& c : checks) {
            all_pass = all_pass && c.pass;
            jchecks.push_back({{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}});
            if (!quiet && !c.pass)
                std::cerr << "instance " << id << ": " << c.name << " FAILED\n  lhs=" << c.lhs
                          << "\n  rhs=" << c.rhs << "\n";
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                        .count();
        // timing is informational and outside the determinism contract
        results.push_back({{"id", id}, {"checks", jchecks}, {"ms", ms}});
        if (!quiet) {
            std::cout << "instance " << id << ":";
            for (const auto& c : checks)
                std::cout << " " << c.name << "=" << (c.pass ? "pass" : "FAIL");
            std::cout << "\n";
        }
    }
    if (!report_path.empty()) {
        json doc;
        doc["meta"] = std::move(meta);
        doc["results"] = results;
        std::ofstream out(report_path);
        if (!out) throw InvalidInput("cannot write " + report_path);
        out << doc.dump(2) << "\n";
    }
    if (!quiet) std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
    return all_pass ? 0 : 1;
}

int cmd_invariants(const RatMat& gram, const std::vector<long>& primes) {
    QuadSpace s(gram);
    SpaceInvariants inv;
    try {
        inv = space_invariants(s, primes);
    } catch (const UnsupportedDimension& e) {
        throw InvalidInput(e.what());
    }
    json out;
    out["n"] = inv.n;
    out["delta"] = inv.delta.rep.get_str();
    out["disc_field_disc"] = inv.disc_field_disc.str();
    json ram = json::array();
    for (const Place& v : inv.q_class.ram) {
        if (v.is_finite())
            ram.push_back(v.p());
        else
            ram.push_back("inf");
    }
    out["ram"] = ram;
    out["s_inf"] = inv.s_inf;
    for (const auto& [p, t] : inv.core_dims) out["t_" + std::to_string(p)] = t;
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice and even Clifford order calculator"};
    app.require_subcommand(1);

    std::uint64_t seed = 42;
    size_t count = 10;
    CorpusOptions opts;
    std::string report, instances_path, outfile, gram_arg, primes_arg;
    bool quiet = false;
    bool use_gen = false;

    auto* gen = app.add_subcommand("gen", "write a reproducible instance corpus");
    gen->add_option("--seed", seed);
    gen->add_option("--count", count);
    gen->add_option("--max-entry", opts.max_entry);
    gen->add_option("--max-prime", opts.max_prime);
    gen->add_option("-o,--output", outfile);

    auto* verify = app.add_subcommand("verify", "run every check on a corpus or instance file");
    verify->add_flag("--gen", use_gen, "generate the corpus instead of reading a file");
    verify->add_option("--seed", seed);
    verify->add_option("--count", count);
    verify->add_option("--max-entry", opts.max_entry);
    verify->add_option("--max-prime", opts.max_prime);
    verify->add_option("--report", report);
    verify->add_option("--instances", instances_path);
    verify->add_flag("--quiet", quiet);

    auto* inv = app.add_subcommand("invariants", "print classification data of a space");
    inv->add_option("--gram", gram_arg, "JSON matrix of rational strings, or @file")->required();
    inv->add_option("--primes", primes_arg, "comma-separated primes for core dimensions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(seed, count, opts, outfile);
        if (verify->parsed()) {
            std::vector<InputInstance> inputs;
            json meta{{"version", kVersion}};
            if (use_gen) {
                for (auto& e : gen_corpus(seed, count, opts))
                    inputs.push_back({e.gram, e.h, std::nullopt});
                meta["seed"] = seed;
                meta["count"] = count;
            } else if (!instances_path.empty()) {
                inputs = load_instances(instances_path);
                meta["seed"] = nullptr;
                meta["count"] = inputs.size();
            } else {
                std::cerr << "verify needs --gen or --instances FILE\n";
                return 2;
            }
            return cmd_verify(inputs, seed, report, quiet, std::move(meta));
        }
        if (inv->parsed()) {
            json jg;
            try {
                if (!gram_arg.empty() && gram_arg[0] == '@') {
                    std::ifstream in(gram_arg.substr(1));
                    if (!in) throw InvalidInput("cannot open " + gram_arg.substr(1));
                    in >> jg;
                } else {
                    jg = json::parse(gram_arg);
                }
            } catch (const json::exception& e) {
                throw InvalidInput(std::string("JSON parse error: ") + e.what());
            }
            std::vector<long> primes;
            if (!primes_arg.empty()) {
                size_t pos = 0;
                while (pos < primes_arg.size()) {
                    size_t comma = primes_arg.find(',', pos);
                    if (comma == std::string::npos) comma = primes_arg.size();
                    try {
                        primes.push_back(std::stol(primes_arg.substr(pos, comma - pos)));
                    } catch (const std::exception&) {
                        throw InvalidInput("bad prime list: " + primes_arg);
                    }
                    pos = comma + 1;
                }
            }
            return cmd_invariants(gram_from_json(jg), primes);
        }
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "check error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
