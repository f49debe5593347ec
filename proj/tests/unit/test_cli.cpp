#include "commands.hpp"

#include "qk/io/certificate_file.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result qk_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = qk::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0;
    return n;
}

class Scratch {
public:
    Scratch() : dir_(fs::temp_directory_path() / ("qk-cli-" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

const std::string kSinkStar = "qkdg 1\nn 3\nk 0\na 0 1\na 0 2\n";

} // namespace

TEST_CASE("gen emits the documented families", "[cli]") {
    const Result dn = qk_run({"gen", "dn", "--n", "1"});
    CHECK(dn.code == 0);
    CHECK(dn.out.find("\nn 6\n") != std::string::npos);
    CHECK(count_lines_starting(dn.out, "a ") == 6);
    CHECK(count_lines_starting(qk_run({"gen", "dpn", "--n", "1"}).out, "a ") == 8);
    CHECK(qk_run({"gen", "dn", "--n", "0"}).code == 2);
    CHECK(qk_run({"gen", "nope"}).code == 2);

    const Result rs = qk_run({"gen", "random-split", "--seed", "3", "--nk", "4", "--ni", "6", "--sink-free"});
    CHECK(rs.code == 0);
    CHECK(rs.out == qk_run({"gen", "random-split", "--seed", "3", "--nk", "4", "--ni", "6", "--sink-free"}).out);
    CHECK(qk_run({"gen", "random-split", "--nk", "0", "--ni", "1", "--sink-free"}).code == 2);
    CHECK(qk_run({"gen", "random-complete-split", "--seed", "1", "--nk", "3", "--ni", "3"}).code == 0);
}

TEST_CASE("verify honours the exit-code contract", "[cli]") {
    Scratch tmp;
    const std::string dn1 = tmp.write("dn1.qkdg", qk_run({"gen", "dn", "--n", "1"}).out);
    const Result ok = qk_run({"verify", dn1, "--set", "0,4"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("\"verified\": true") != std::string::npos);

    const Result not_qk = qk_run({"verify", dn1, "--set", "0"});
    CHECK(not_qk.code == 1);
    CHECK(not_qk.err.find("vertex 4") != std::string::npos);

    const std::string bad = tmp.write("bad.qkdg", "qkdg 7\nn 1\n");
    const Result malformed = qk_run({"verify", bad, "--set", "0"});
    CHECK(malformed.code == 2);
    CHECK(malformed.err.find("line 1") != std::string::npos);

    CHECK(qk_run({"verify", dn1}).code == 2);
    CHECK(qk_run({"verify", dn1, "--set", "9"}).code == 2);
    CHECK(qk_run({"verify", tmp.path("missing.qkdg"), "--set", "0"}).code == 2);
}

TEST_CASE("solve dispatches and re-verifies", "[cli]") {
    Scratch tmp;
    const std::string dn1 = tmp.write("dn1.qkdg", qk_run({"gen", "dn", "--n", "1"}).out);
    const std::string star = tmp.write("star.qkdg", kSinkStar);

    const Result autod = qk_run({"solve", dn1});
    REQUIRE(autod.code == 0);
    const auto cert = qk::io::parse_certificate(autod.out, 6);
    CHECK(cert.certificate.algorithm == "one-way");
    CHECK(cert.certificate.size() <= 2);
    CHECK(cert.verified);

    const Result cs = qk_run({"solve", star});
    REQUIRE(cs.code == 0);
    const auto min = qk::io::parse_certificate(cs.out, 3);
    CHECK(min.certificate.set == qk::VertexSet{1, 2});
    CHECK(min.optimal);

    const Result none = qk_run({"solve", dn1, "--algo", "fpt-k", "--k", "1"});
    CHECK(none.code == 1);
    CHECK(none.err.find("no quasi-kernel of size ≤ 1") != std::string::npos);
    CHECK(qk_run({"solve", dn1, "--algo", "fpt-i", "--k", "2"}).code == 0);
    CHECK(qk_run({"solve", dn1, "--algo", "exact", "--k", "1"}).code == 1);
    CHECK(qk_run({"solve", dn1, "--algo", "exact"}).code == 0);
    CHECK(qk_run({"solve", dn1, "--algo", "fpt-k"}).code == 2);
    CHECK(qk_run({"solve", dn1, "--algo", "magic"}).code == 2);

    const Result sink = qk_run({"solve", star, "--algo", "two-thirds"});
    CHECK(sink.code == 2);
    CHECK(sink.err.find("has a sink: use two-thirds via sink peeling") != std::string::npos);

    const std::string plain = tmp.write("plain.qkdg", "qkdg 1\nn 3\na 0 1\na 1 2\na 2 0\n");
    CHECK(qk_run({"solve", plain, "--algo", "one-way"}).code == 2);
    const Result cl = qk_run({"solve", plain});
    CHECK(cl.code == 0);
    CHECK(qk::io::parse_certificate(cl.out, 3).certificate.algorithm == "cl");
}

TEST_CASE("certificates written with --out re-verify", "[cli]") {
    Scratch tmp;
    const std::string dn2 = tmp.write("dn2.qkdg", qk_run({"gen", "dn", "--n", "2"}).out);
    const std::string dn1 = tmp.write("dn1.qkdg", qk_run({"gen", "dn", "--n", "1"}).out);
    const std::string out = tmp.path("c.json");
    REQUIRE(qk_run({"solve", dn2, "--out", out}).code == 0);
    CHECK(qk_run({"verify", dn2, "--cert", out}).code == 0);
    CHECK(qk_run({"verify", dn1, "--cert", out}).code != 0);

    std::ifstream in(out);
    std::stringstream s;
    s << in.rdbuf();
    auto doc = qk::io::parse_certificate(s.str(), 15);
    doc.certificate.witnesses[1] = {1, 0};
    const std::string forged = tmp.write("forged.json", qk::io::format_certificate(doc));
    CHECK(qk_run({"verify", dn2, "--cert", forged}).code == 1);
    CHECK(qk_run({"verify", dn2, "--cert", tmp.write("junk.json", "{")}).code == 2);
}

TEST_CASE("reduce, bounds and dot", "[cli]") {
    Scratch tmp;
    const std::string arc = tmp.write("arc.qkdg", "qkdg 1\nn 2\na 0 1\n");
    const Result host = qk_run({"reduce", arc, "--q", "1"});
    REQUIRE(host.code == 0);
    CHECK(host.out.find("\nn 14\n") != std::string::npos);
    CHECK(count_lines_starting(host.out, "a ") == 28);
    CHECK(host.out.find("# label 2 s1_1") != std::string::npos);
    CHECK(qk_run({"reduce", arc, "--q", "0"}).code == 2);

    const std::string dn2 = tmp.write("dn2.qkdg", qk_run({"gen", "dn", "--n", "2"}).out);
    const Result b = qk_run({"bounds", dn2});
    REQUIRE(b.code == 0);
    CHECK(b.out.find("one-way") != std::string::npos);
    CHECK(b.out.find("5.13") != std::string::npos);
    CHECK(b.out.find(" no\n") == std::string::npos);

    const Result peel = qk_run({"bounds", tmp.write("star.qkdg", kSinkStar)});
    REQUIRE(peel.code == 0);
    CHECK(peel.out.find("peel-sinks(two-thirds)") != std::string::npos);
    CHECK(peel.out.find("8/3") != std::string::npos);

    const Result dot = qk_run({"dot", dn2});
    CHECK(dot.code == 0);
    CHECK(dot.out.rfind("digraph qk {", 0) == 0);
}

TEST_CASE("usage errors", "[cli]") {
    CHECK(qk_run({"--help"}).code == 0);
    CHECK(qk_run({}).code == 2);
    CHECK(qk_run({"frobnicate"}).code == 2);
    CHECK(qk_run({"gen", "dn", "--n", "x"}).code == 2);
}
