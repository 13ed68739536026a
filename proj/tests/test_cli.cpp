#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "spinel/hash.hpp"
#include "spinel/mat4.hpp"

using namespace spinel;

namespace {

std::string cli_path() {
    const char* p = std::getenv("SPINEL_CLI");
    REQUIRE_MESSAGE(p != nullptr, "SPINEL_CLI must point at the built binary");
    return p;
}

struct RunResult {
    int status;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int rc = pclose(pipe);
    return {WEXITSTATUS(rc), out};
}

struct TempDir {
    std::filesystem::path dir;
    TempDir() {
        dir = std::filesystem::temp_directory_path() /
              ("spinel_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("hash of empty input prints the serialized identity") {
    TempDir tmp;
    const auto empty = tmp.path("empty.bin");
    std::ofstream(empty, std::ios::binary).close();
    const auto r = run_cli("hash --in " + empty);
    CHECK(r.status == 0);
    CHECK(r.out == to_hex(serialize_mat(Mat4::identity()).bytes) + "\n");
}

TEST_CASE("params one-liner for the first full-size set") {
    const auto r = run_cli("analyze params --set F1");
    CHECK(r.status == 0);
    CHECK(r.out == "sig=59072 pk=128 sk=256 cost=35325923\n");
}

TEST_CASE("unknown parameter set is a distinct usage error") {
    const auto r = run_cli("analyze params --set nosuch");
    CHECK(r.status == 2);
}

TEST_CASE("keygen/sign/verify round trip on temp files") {
    TempDir tmp;
    const std::string entropy(2 * 192, 'a');   // deterministic hex entropy
    const auto sk = tmp.path("sk.bin"), pk = tmp.path("pk.bin");
    const auto msg = tmp.path("msg.bin"), sig = tmp.path("sig.bin");

    CHECK(run_cli("keygen --set desk --out-sk " + sk + " --out-pk " + pk + " --entropy-hex " +
                  entropy)
              .status == 0);
    {
        std::ofstream m(msg, std::ios::binary);
        m << "a small message for the round trip";
    }
    CHECK(run_cli("sign --set desk --sk " + sk + " --in " + msg + " --out " + sig).status == 0);

    const auto ok = run_cli("verify --set desk --pk " + pk + " --in " + msg + " --sig " + sig);
    CHECK(ok.status == 0);
    CHECK(ok.out == "accept\n");

    // corrupt one signature byte: reject with nonzero status
    {
        std::fstream f(sig, std::ios::binary | std::ios::in | std::ios::out);
        f.seekp(100);
        f.put(0x01);
    }
    const auto bad = run_cli("verify --set desk --pk " + pk + " --in " + msg + " --sig " + sig);
    CHECK(bad.status == 1);
    CHECK(bad.out == "reject\n");

    // malformed signature file: data error, distinct from reject
    {
        std::ofstream f(sig, std::ios::binary | std::ios::trunc);
        f << "short";
    }
    const auto short_sig =
        run_cli("verify --set desk --pk " + pk + " --in " + msg + " --sig " + sig);
    CHECK(short_sig.status == 1);
}

TEST_CASE("hex key and signature files round trip") {
    TempDir tmp;
    const std::string entropy(2 * 192, 'b');
    const auto sk = tmp.path("sk.hex"), pk = tmp.path("pk.hex");
    const auto msg = tmp.path("msg.bin"), sig = tmp.path("sig.hex");
    CHECK(run_cli("keygen --set desk --hex --out-sk " + sk + " --out-pk " + pk +
                  " --entropy-hex " + entropy)
              .status == 0);
    {
        std::ofstream m(msg, std::ios::binary);
        m << "hex-mode message";
    }
    CHECK(run_cli("sign --set desk --hex --sk " + sk + " --in " + msg + " --out " + sig).status ==
          0);
    const auto ok =
        run_cli("verify --set desk --hex --pk " + pk + " --in " + msg + " --sig " + sig);
    CHECK(ok.status == 0);
    CHECK(ok.out == "accept\n");
    // the hex public key is text: 256 hex chars + newline
    CHECK(std::filesystem::file_size(pk) == 257);
}

TEST_CASE("degradation CSV has the documented shape") {
    const auto r = run_cli("analyze degrade --set F1 --m-min 0 --m-max 4 --m-step 2");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("m,p,sec,delta_sec,sec_eff\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);   // header + 3 rows
}

TEST_CASE("candidate CSV is ranked and filterable") {
    const auto r = run_cli("analyze params --budget 10 --sigma 0");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("h,d,b,k,w,sig_bytes,sign_cost_hashes,keygen_cost_hashes,sec_eff\n", 0) ==
          0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 56);
}

TEST_CASE("registry files feed the candidate filter") {
    TempDir tmp;
    const auto reg = tmp.path("registry.txt");
    {
        std::ofstream f(reg);
        f << "# two rows\n64 8 14 22 256\n72 9 16 16 256\n";
    }
    const auto r = run_cli("analyze params --registry " + reg + " --budget 10 --sigma 0");
    CHECK(r.status == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);
    CHECK(r.out.find("64,8,14,22,256,59072,35325923,") != std::string::npos);

    const auto bad = run_cli("analyze params --registry " + tmp.path("nope.txt"));
    CHECK(bad.status == 3);
}

TEST_CASE("gen-sts writes the exact requested size") {
    TempDir tmp;
    const auto out = tmp.path("sts.bin");
    const auto r = run_cli("gen-sts --count 2 --bits 100000 --out " + out);
    CHECK(r.status == 0);
    CHECK(std::filesystem::file_size(out) == 2 * 12'500);
}

TEST_CASE("bench prints medians and hash counts") {
    const auto r = run_cli("bench --op keygen --set desk --runs 3");
    CHECK(r.status == 0);
    CHECK(r.out.find("op=keygen set=desk runs=3") != std::string::npos);
    CHECK(r.out.find("thash_model_units=33551") != std::string::npos);
}

TEST_CASE("environment variable supplies the default set") {
    const auto r = run_cli("analyze params --set P1");
    CHECK(r.status == 0);
    // SPINEL_PARAM_SET path: run with env prefix through the shell
    const std::string cmd = "SPINEL_PARAM_SET=desk " + cli_path() + " bench --op hash --runs 3";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (fread(buf, 1, sizeof buf, pipe) > 0) {}
    CHECK(WEXITSTATUS(pclose(pipe)) == 0);
}
