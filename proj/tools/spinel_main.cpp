#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "spinel/analysis.hpp"
#include "spinel/randgen.hpp"
#include "spinel/scheme.hpp"

#if defined(__x86_64__)
#include <x86intrin.h>
#endif

using namespace spinel;

namespace {

constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::vector<std::uint8_t> data;
        char buf[65536];
        while (std::cin.read(buf, sizeof buf) || std::cin.gcount() > 0)
            data.insert(data.end(), buf, buf + std::cin.gcount());
        return data;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open input file: " + path);
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    if (in.bad()) throw DataError("error reading file: " + path);
    return data;
}

void write_output(const std::string& path, std::span<const std::uint8_t> data) {
    if (path.empty() || path == "-") {
        std::cout.write(reinterpret_cast<const char*>(data.data()),
                        static_cast<std::streamsize>(data.size()));
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open output file: " + path);
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out) throw DataError("error writing file: " + path);
}

void write_text(const std::string& path, const std::string& text) {
    write_output(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

// hex mode: key/signature files as lowercase hex text instead of raw bytes
std::vector<std::uint8_t> read_key_file(const std::string& path, bool hex_mode) {
    auto data = read_input(path);
    if (!hex_mode) return data;
    std::string text(data.begin(), data.end());
    std::erase_if(text, [](char c) { return c == '\n' || c == '\r' || c == ' ' || c == '\t'; });
    std::vector<std::uint8_t> out(text.size() / 2);
    if (!from_hex(text, out)) throw DataError("malformed hex in " + path);
    return out;
}

void write_key_file(const std::string& path, std::span<const std::uint8_t> data, bool hex_mode) {
    if (hex_mode) {
        write_text(path, to_hex(data) + "\n");
    } else {
        write_output(path, data);
    }
}

struct ParamChoice {
    std::string name;
    std::uint32_t h = 0, d = 0, b = 0, k = 0, w = 0;

    void add_options(CLI::App* cmd) {
        cmd->set_help_flag("--help", "print this help");   // frees -h for the height flag
        cmd->add_option("--set", name, "named parameter set (F1..F10, P1..P10, desk)");
        cmd->add_option("--h", h, "hypertree height");
        cmd->add_option("--d", d, "hypertree layers");
        cmd->add_option("--b", b, "height of one few-time tree");
        cmd->add_option("--k", k, "number of few-time trees");
        cmd->add_option("--w", w, "Winternitz parameter (16 or 256)");
    }

    bool explicit_set() const { return !name.empty() || h || d || b || k || w; }

    SpinelParams resolve() const {
        if (!name.empty()) {
            auto p = SpinelParams::by_name(name);
            if (!p) throw UsageError("unknown parameter set: " + name);
            return *p;
        }
        if (h || d || b || k || w) {
            try {
                return SpinelParams::make(h, d, b, k, w);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("invalid parameters: ") + e.what());
            }
        }
        if (const char* env = std::getenv("SPINEL_PARAM_SET")) {
            auto p = SpinelParams::by_name(env);
            if (!p) throw UsageError(std::string("SPINEL_PARAM_SET names an unknown set: ") + env);
            return *p;
        }
        throw UsageError("no parameter set: pass --set, explicit --h/--d/--b/--k/--w, "
                         "or export SPINEL_PARAM_SET");
    }
};

std::vector<std::uint8_t> parse_hex_arg(const std::string& hex, std::size_t bytes,
                                        const std::string& what) {
    std::vector<std::uint8_t> out(bytes);
    if (!from_hex(hex, out))
        throw UsageError(what + " must be " + std::to_string(2 * bytes) + " hex characters");
    return out;
}

std::vector<std::uint8_t> os_entropy(std::size_t n) {
    std::vector<std::uint8_t> out(n);
    std::random_device rd;
    for (auto& b : out) b = static_cast<std::uint8_t>(rd());
    return out;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

std::uint64_t median_u64(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

struct BenchResult {
    std::string op;
    std::string set;
    int runs = 0;
    std::vector<double> wall_ns;
    std::vector<std::uint64_t> cycles;   // empty when the platform lacks a counter
    std::uint64_t model_units = 0;
    std::uint64_t total_hashes = 0;
};

template <typename F>
BenchResult run_bench(const std::string& op, const std::string& set, int runs, F&& fn) {
    if (runs < 3) throw UsageError("bench needs at least 3 runs for a median");
    BenchResult r;
    r.op = op;
    r.set = set;
    r.runs = runs;
    for (int i = 0; i < runs; ++i) {
        CountingObserver counts;
        ScopedObserver guard(&counts);
        const auto t0 = std::chrono::steady_clock::now();
#if defined(__x86_64__)
        const std::uint64_t c0 = __rdtsc();
#endif
        fn();
#if defined(__x86_64__)
        r.cycles.push_back(__rdtsc() - c0);
#endif
        const auto t1 = std::chrono::steady_clock::now();
        r.wall_ns.push_back(static_cast<double>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
        r.model_units = counts.model_units();
        r.total_hashes = counts.total();
    }
    return r;
}

void print_bench(const BenchResult& r) {
    std::printf("op=%s set=%s runs=%d median_wall_ns=%.0f", r.op.c_str(),
                r.set.empty() ? "-" : r.set.c_str(), r.runs, median(r.wall_ns));
    if (!r.cycles.empty())
        std::printf(" median_cycles=%llu", static_cast<unsigned long long>(median_u64(r.cycles)));
    std::printf(" thash_model_units=%llu thash_total=%llu\n",
                static_cast<unsigned long long>(r.model_units),
                static_cast<unsigned long long>(r.total_hashes));
    for (int i = 0; i < r.runs; ++i) {
        std::printf("run=%d wall_ns=%.0f", i, r.wall_ns[i]);
        if (!r.cycles.empty())
            std::printf(" cycles=%llu", static_cast<unsigned long long>(r.cycles[i]));
        std::printf("\n");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"stateless hash-based signatures over an SL4(F_p) walk hash"};
    app.require_subcommand(1);

    auto* cmd_hash = app.add_subcommand("hash", "hash a file (or stdin) to 64 bytes");
    std::string hash_in;
    bool hash_raw = false;
    cmd_hash->add_option("--in", hash_in, "input file, '-' for stdin (default)");
    cmd_hash->add_flag("--raw", hash_raw, "write the 64 raw bytes instead of hex");

    auto* cmd_keygen = app.add_subcommand("keygen", "generate a key pair");
    ParamChoice kg_params;
    kg_params.add_options(cmd_keygen);
    std::string kg_sk = "sk.bin", kg_pk = "pk.bin", kg_entropy_hex, kg_entropy_file;
    bool kg_hex = false;
    cmd_keygen->add_option("--out-sk", kg_sk, "secret key output path (default sk.bin)");
    cmd_keygen->add_option("--out-pk", kg_pk, "public key output path (default pk.bin)");
    cmd_keygen->add_option("--entropy-hex", kg_entropy_hex, "192 bytes of entropy, hex");
    cmd_keygen->add_option("--entropy-file", kg_entropy_file, "file with 192 bytes of entropy");
    cmd_keygen->add_flag("--hex", kg_hex, "write key files as hex text");

    auto* cmd_sign = app.add_subcommand("sign", "sign a message file");
    ParamChoice sg_params;
    sg_params.add_options(cmd_sign);
    std::string sg_sk, sg_in, sg_out = "sig.bin", sg_rand_hex;
    bool sg_hex = false;
    cmd_sign->add_option("--sk", sg_sk, "secret key file")->required();
    cmd_sign->add_option("--in", sg_in, "message file, '-' for stdin");
    cmd_sign->add_option("--out", sg_out, "signature output path (default sig.bin)");
    cmd_sign->add_option("--rand-hex", sg_rand_hex, "64 bytes of signing randomness, hex");
    cmd_sign->add_flag("--hex", sg_hex, "key file and signature output as hex text");

    auto* cmd_verify = app.add_subcommand("verify", "verify a signature file");
    ParamChoice vf_params;
    vf_params.add_options(cmd_verify);
    std::string vf_pk, vf_in, vf_sig;
    bool vf_hex = false;
    cmd_verify->add_option("--pk", vf_pk, "public key file")->required();
    cmd_verify->add_option("--in", vf_in, "message file, '-' for stdin");
    cmd_verify->add_option("--sig", vf_sig, "signature file")->required();
    cmd_verify->add_flag("--hex", vf_hex, "key and signature files are hex text");

    auto* cmd_sts = app.add_subcommand("gen-sts", "generate statistical test input streams");
    StreamSpec spec;
    std::string sts_out;
    cmd_sts->add_option("--count", spec.stream_count, "number of streams (default 100)");
    cmd_sts->add_option("--bits", spec.bits_per_stream, "bits per stream (default 1000000)");
    cmd_sts->add_option("--id-offset", spec.id_offset, "first stream id (default 0)");
    cmd_sts->add_option("--out", sts_out, "output path")->required();

    auto* cmd_analyze = app.add_subcommand("analyze", "exposure-degradation and parameter models");
    cmd_analyze->require_subcommand(1);

    auto* cmd_degrade = cmd_analyze->add_subcommand("degrade", "emit a degradation curve as CSV");
    ParamChoice dg_params;
    dg_params.add_options(cmd_degrade);
    double dg_m0 = 0, dg_mmin = 0, dg_mmax = -1, dg_step = 1, dg_target = 256;
    std::string dg_out = "-";
    cmd_degrade->add_option("--m0", dg_m0, "baseline budget exponent (default 0)");
    cmd_degrade->add_option("--m-min", dg_mmin, "grid start (default 0)");
    cmd_degrade->add_option("--m-max", dg_mmax, "grid end (default h+16)");
    cmd_degrade->add_option("--m-step", dg_step, "grid step (default 1)");
    cmd_degrade->add_option("--target", dg_target, "nominal security bits (default 256)");
    cmd_degrade->add_option("--out", dg_out, "CSV output path, '-' for stdout");

    auto* cmd_params = cmd_analyze->add_subcommand("params", "sizes, costs, candidate filter");
    ParamChoice pr_params;
    pr_params.add_options(cmd_params);
    std::string pr_registry, pr_rank = "cost", pr_out = "-";
    double pr_budget = 0, pr_sigma = 0, pr_m0 = 0, pr_target = 256;
    cmd_params->add_option("--registry", pr_registry, "registry file of 'h d b k w' rows");
    cmd_params->add_option("--budget", pr_budget, "operational budget exponent m*");
    cmd_params->add_option("--sigma", pr_sigma, "minimum Sec_eff(m*) in bits");
    cmd_params->add_option("--rank", pr_rank, "ranking: cost | size (default cost)");
    cmd_params->add_option("--m0", pr_m0, "baseline budget exponent (default 0)");
    cmd_params->add_option("--target", pr_target, "nominal security bits (default 256)");
    cmd_params->add_option("--out", pr_out, "CSV output path, '-' for stdout");

    auto* cmd_bench = app.add_subcommand("bench", "time an operation and count hash calls");
    ParamChoice bn_params;
    bn_params.add_options(cmd_bench);
    std::string bn_op;
    int bn_runs = 10;
    std::size_t bn_msg_bytes = 64;
    cmd_bench->add_option("--op", bn_op, "hash | thash | keygen | sign | verify")->required();
    cmd_bench->add_option("--runs", bn_runs, "runs for the median (default 10)");
    cmd_bench->add_option("--msg-bytes", bn_msg_bytes, "message size for hash/sign (default 64)");

    CLI11_PARSE(app, argc, argv);

    if (*cmd_hash) {
        const auto data = read_input(hash_in);
        const Digest d = hash(data);
        if (hash_raw) {
            write_output("-", d.bytes);
        } else {
            std::printf("%s\n", to_hex(d.bytes).c_str());
        }
        return 0;
    }

    if (*cmd_keygen) {
        const SpinelParams params = kg_params.resolve();
        std::vector<std::uint8_t> entropy;
        if (!kg_entropy_hex.empty()) {
            entropy = parse_hex_arg(kg_entropy_hex, kEntropyBytes, "--entropy-hex");
        } else if (!kg_entropy_file.empty()) {
            entropy = read_input(kg_entropy_file);
            if (entropy.size() < kEntropyBytes)
                throw DataError("entropy file holds fewer than 192 bytes");
        } else {
            entropy = os_entropy(kEntropyBytes);
        }
        const auto [sk, pk] = keygen(entropy, params);
        write_key_file(kg_sk, encode(sk), kg_hex);
        write_key_file(kg_pk, encode(pk), kg_hex);
        std::fprintf(stderr, "wrote %s (256 bytes) and %s (128 bytes)\n", kg_sk.c_str(),
                     kg_pk.c_str());
        return 0;
    }

    if (*cmd_sign) {
        const SpinelParams params = sg_params.resolve();
        SecretKey sk;
        try {
            sk = decode_secret_key(read_key_file(sg_sk, sg_hex));
        } catch (const DecodeError& e) {
            throw DataError(std::string("malformed secret key: ") + e.what());
        }
        std::vector<std::uint8_t> opt_rand;
        if (!sg_rand_hex.empty()) opt_rand = parse_hex_arg(sg_rand_hex, 64, "--rand-hex");
        const auto msg = read_input(sg_in);
        const SpinelSignature sig = sign(msg, sk, params, opt_rand);
        write_key_file(sg_out, encode(sig, params), sg_hex);
        return 0;
    }

    if (*cmd_verify) {
        const SpinelParams params = vf_params.resolve();
        const auto pk_bytes = read_key_file(vf_pk, vf_hex);
        const auto sig_bytes = read_key_file(vf_sig, vf_hex);
        const auto msg = read_input(vf_in);
        if (verify_encoded(msg, sig_bytes, pk_bytes, params)) {
            std::printf("accept\n");
            return 0;
        }
        std::printf("reject\n");
        return kExitReject;
    }

    if (*cmd_sts) {
        std::ofstream out(sts_out, std::ios::binary);
        if (!out) throw DataError("cannot open output file: " + sts_out);
        try {
            generate_streams(spec, out);
        } catch (const std::exception& e) {
            throw DataError(std::string("stream generation failed for ") + sts_out + ": " +
                            e.what());
        }
        return 0;
    }

    if (*cmd_degrade) {
        const SpinelParams p = dg_params.resolve();
        if (dg_step <= 0) throw UsageError("--m-step must be positive");
        const double mmax = dg_mmax < 0 ? p.h + 16.0 : dg_mmax;
        std::ostringstream csv;
        csv << "m,p,sec,delta_sec,sec_eff\n";
        for (double m = dg_mmin; m <= mmax + 1e-9; m += dg_step) {
            DegradationQuery q{p.h, p.b, p.k, m, dg_m0, dg_target};
            const auto fp = forgery_probability(q);
            const auto s = effective_security(q);
            char line[160];
            std::snprintf(line, sizeof line, "%.6g,%.12g,%.6f,%.6f,%.6f\n", m, fp.p, s.sec,
                          s.delta_sec, s.sec_eff);
            csv << line;
        }
        write_text(dg_out, csv.str());
        return 0;
    }

    if (*cmd_params) {
        if (pr_params.explicit_set()) {
            const SpinelParams p = pr_params.resolve();
            std::printf(
                "sig=%llu pk=%u sk=%u cost=%llu\n",
                static_cast<unsigned long long>(signature_size_bytes(p.h, p.d, p.b, p.k, p.w)),
                static_cast<unsigned>(kPublicKeyBytes), static_cast<unsigned>(kSecretKeyBytes),
                static_cast<unsigned long long>(signing_cost_hashes(p.h, p.d, p.b, p.k, p.w)));
            return 0;
        }
        std::vector<SpinelParams> registry;
        if (!pr_registry.empty()) {
            std::ifstream in(pr_registry);
            if (!in) throw DataError("cannot open registry: " + pr_registry);
            try {
                registry = parse_registry(in);
            } catch (const std::invalid_argument& e) {
                throw DataError(std::string("malformed registry: ") + e.what());
            }
        } else {
            registry = builtin_registry();
        }
        if (pr_rank != "cost" && pr_rank != "size")
            throw UsageError("--rank must be 'cost' or 'size'");
        const auto rows = enumerate_candidates(
            pr_budget, pr_sigma, registry,
            pr_rank == "size" ? CandidateRank::SizeFirst : CandidateRank::CostFirst, pr_m0,
            pr_target);
        std::ostringstream csv;
        csv << "h,d,b,k,w,sig_bytes,sign_cost_hashes,keygen_cost_hashes,sec_eff\n";
        for (const auto& row : rows) {
            char line[200];
            std::snprintf(line, sizeof line, "%u,%u,%u,%u,%u,%llu,%llu,%llu,%.6f\n", row.params.h,
                          row.params.d, row.params.b, row.params.k, row.params.w,
                          static_cast<unsigned long long>(row.sig_bytes),
                          static_cast<unsigned long long>(row.sign_cost),
                          static_cast<unsigned long long>(row.keygen_cost), row.sec_eff);
            csv << line;
        }
        if (rows.empty())
            std::fprintf(stderr, "no candidate satisfies Sec_eff(%g) >= %g\n", pr_budget,
                         pr_sigma);
        write_text(pr_out, csv.str());
        return 0;
    }

    if (*cmd_bench) {
        std::mt19937_64 rng(0xbe7c4);
        if (bn_op == "hash") {
            std::vector<std::uint8_t> msg(bn_msg_bytes);
            for (auto& b : msg) b = static_cast<std::uint8_t>(rng());
            print_bench(run_bench("hash", "", bn_runs, [&] { (void)hash(msg); }));
            return 0;
        }
        if (bn_op == "thash") {
            Seed seed;
            for (auto& b : seed.bytes) b = static_cast<std::uint8_t>(rng());
            const SeedContext ctx(seed);
            Adrs a;
            a.set_type(AdrsType::WotsChain);
            std::vector<std::uint8_t> msg(bn_msg_bytes);
            for (auto& b : msg) b = static_cast<std::uint8_t>(rng());
            print_bench(run_bench("thash", "", bn_runs, [&] { (void)thash(ctx, a, msg); }));
            return 0;
        }
        const SpinelParams params = bn_params.resolve();
        const std::string set = bn_params.name.empty() ? "custom" : bn_params.name;
        std::vector<std::uint8_t> entropy(kEntropyBytes);
        for (auto& b : entropy) b = static_cast<std::uint8_t>(rng());
        if (bn_op == "keygen") {
            print_bench(run_bench("keygen", set, bn_runs, [&] { (void)keygen(entropy, params); }));
            return 0;
        }
        const auto [sk, pk] = keygen(entropy, params);
        std::vector<std::uint8_t> msg(bn_msg_bytes);
        for (auto& b : msg) b = static_cast<std::uint8_t>(rng());
        if (bn_op == "sign") {
            print_bench(run_bench("sign", set, bn_runs, [&] { (void)sign(msg, sk, params); }));
            return 0;
        }
        if (bn_op == "verify") {
            const SpinelSignature sig = sign(msg, sk, params);
            print_bench(
                run_bench("verify", set, bn_runs, [&] { (void)verify(msg, sig, pk, params); }));
            return 0;
        }
        throw UsageError("unknown bench op: " + bn_op);
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const DataError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    }
}
