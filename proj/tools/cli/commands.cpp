#include "commands.hpp"

#include "qk/io/certificate_file.hpp"
#include "qk/io/instance_file.hpp"
#include "qk/qk.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace qk::cli {

namespace {

struct Settings {
    std::string input;
    std::string set_literal;
    std::string cert_path;
    std::string algo = "auto";
    std::optional<std::size_t> k;
    std::string out_path;

    std::string family;
    std::size_t n = 1;
    std::uint64_t seed = 1;
    std::size_t nk = 3;
    std::size_t ni = 3;
    double p_ki = 0.3;
    double p_ik = 0.5;
    double p_digon = 0.2;
    bool one_way = false;
    bool sink_free = false;

    std::size_t q = 1;
};

// Semantic failure of a command (exit 1), as opposed to an input error.
class Refusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InvalidInput("cannot write '" + path + "'");
    file << text;
}

const SplitDigraph& require_split(const io::Instance& inst, const std::string& algo) {
    if (!inst.split) {
        throw PreconditionError("algorithm '" + algo + "' needs a split partition ('k' line)");
    }
    return *inst.split;
}

std::size_t require_k(const Settings& s) {
    if (!s.k) throw PreconditionError("algorithm '" + s.algo + "' needs --k");
    return *s.k;
}

struct Solution {
    QkCertificate certificate;
    bool optimal = false;
};

Solution solve(const io::Instance& inst, const Settings& s) {
    const std::string& algo = s.algo;
    if (algo == "auto") {
        if (!inst.split) return {certify(inst.graph, quasi_kernel_cl(inst.graph), "cl"), false};
        const SplitFlags flags = classify(*inst.split);
        if (flags.complete_split) return {complete_split_min_qk(*inst.split), true};
        if (flags.one_way && flags.sink_free) return {one_way_qk(*inst.split), false};
        if (flags.sink_free) return {two_thirds_qk(*inst.split), false};
        return {peel_sinks_two_thirds(*inst.split), false};
    }
    if (algo == "cl") return {certify(inst.graph, quasi_kernel_cl(inst.graph), "cl"), false};
    if (algo == "one-way") return {one_way_qk(require_split(inst, algo)), false};
    if (algo == "two-thirds") return {two_thirds_qk(require_split(inst, algo)), false};
    if (algo == "complete-split") return {complete_split_min_qk(require_split(inst, algo)), true};
    if (algo == "fpt-k" || algo == "fpt-i") {
        const std::size_t k = require_k(s);
        const SplitDigraph& sd = require_split(inst, algo);
        auto cert = algo == "fpt-k" ? fpt_by_clique(sd, k) : fpt_by_independent(sd, k);
        if (!cert) throw Refusal("no quasi-kernel of size ≤ " + std::to_string(k));
        return {*cert, false};
    }
    if (algo == "exact") {
        SolveReport report = inst.split ? min_quasi_kernel(*inst.split, s.k) : min_quasi_kernel(inst.graph, s.k);
        if (!report.optimal) throw Refusal("no quasi-kernel of size ≤ " + std::to_string(*s.k));
        return {*report.certificate, true};
    }
    throw PreconditionError("unknown algorithm '" + algo + "'");
}

std::string certificate_document(const io::Instance& inst, const QkCertificate& cert, bool optimal) {
    io::CertificateFile file;
    file.certificate = cert;
    file.verified = verify_certificate(inst.graph, cert);
    if (!file.verified) {
        throw VerificationFailure("certificate failed re-verification before emission");
    }
    file.optimal = optimal;
    file.instance_digest = io::instance_digest(inst);
    return io::format_certificate(file);
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
    const io::Instance inst = io::read_instance(s.input);
    if (!s.cert_path.empty()) {
        std::ifstream in(s.cert_path, std::ios::binary);
        if (!in) throw InvalidInput("cannot open '" + s.cert_path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        const io::CertificateFile file = io::parse_certificate(buffer.str(), inst.graph.vertex_count());
        if (file.instance_digest != io::instance_digest(inst)) {
            err << "certificate names instance " << file.instance_digest << ", input is "
                << io::instance_digest(inst) << "\n";
            return kSemanticFailure;
        }
        if (!verify_certificate(inst.graph, file.certificate)) {
            err << "certificate does not verify against the instance\n";
            return kSemanticFailure;
        }
        out << "ok: certificate for {" << file.certificate.set.to_string() << "} verifies\n";
        return kSuccess;
    }
    const VertexSet set = VertexSet::parse(s.set_literal);
    inst.graph.check_members(set);
    try {
        const QkCertificate cert = certify(inst.graph, set, "verify");
        out << certificate_document(inst, cert, false);
        return kSuccess;
    } catch (const NotQuasiKernel& e) {
        err << "not a quasi-kernel: " << e.what() << "\n";
        return kSemanticFailure;
    }
}

int cmd_solve(const Settings& s, std::ostream& out, std::ostream& err) {
    const io::Instance inst = io::read_instance(s.input);
    Solution sol;
    try {
        sol = solve(inst, s);
    } catch (const Refusal& e) {
        err << e.what() << "\n";
        return kSemanticFailure;
    }
    emit(certificate_document(inst, sol.certificate, sol.optimal), s.out_path, out);
    return kSuccess;
}

int cmd_gen(const Settings& s, std::ostream& out) {
    std::string text;
    if (s.family == "dn") {
        text = io::format_instance(gen_dn(s.n));
    } else if (s.family == "dpn") {
        text = io::format_instance(gen_dpn(s.n));
    } else if (s.family == "random-split") {
        RandomSplitOptions o;
        o.seed = s.seed;
        o.clique_size = s.nk;
        o.independent_size = s.ni;
        o.p_clique_to_independent = s.p_ki;
        o.p_independent_to_clique = s.p_ik;
        o.p_clique_digon = s.p_digon;
        o.one_way = s.one_way;
        o.sink_free = s.sink_free;
        text = io::format_instance(gen_random_split(o));
    } else if (s.family == "random-complete-split") {
        text = io::format_instance(gen_random_complete_split(s.seed, s.nk, s.ni, s.p_digon, s.sink_free));
    } else {
        throw InvalidInput("unknown family '" + s.family + "'");
    }
    emit(text, s.out_path, out);
    return kSuccess;
}

int cmd_reduce(const Settings& s, std::ostream& out) {
    const io::Instance inst = io::read_instance(s.input);
    const ReductionArtifact art = reduce_dds_to_qk(inst.graph, s.q);
    emit(io::format_instance(art.host), s.out_path, out);
    return kSuccess;
}

std::string rational_cell(const Rational& r) {
    std::ostringstream cell;
    cell << r.to_string() << " (" << std::fixed << std::setprecision(2) << r.to_double() << ")";
    return cell.str();
}

int cmd_bounds(const Settings& s, std::ostream& out) {
    const io::Instance inst = io::read_instance(s.input);
    const Digraph& d = inst.graph;
    const std::size_t n = d.vertex_count();

    struct Row {
        std::string algorithm;
        std::string bound;
        std::size_t achieved;
        bool verified;
    };
    std::vector<Row> rows;
    auto add = [&](const QkCertificate& cert, std::string bound) {
        rows.push_back({cert.algorithm, std::move(bound), cert.size(), verify_certificate(d, cert)});
    };

    if (inst.split) {
        const SplitDigraph& sd = *inst.split;
        const SplitFlags flags = classify(sd);
        if (flags.one_way && flags.sink_free) {
            std::ostringstream bound;
            bound << std::fixed << std::setprecision(2) << one_way_bound(n);
            add(one_way_qk(sd), bound.str());
        }
        if (flags.sink_free) {
            add(two_thirds_qk(sd), rational_cell(two_thirds_bound(n)));
        } else {
            add(peel_sinks_two_thirds(sd), rational_cell(sink_peeling_bound(d, Rational(2, 3))));
        }
        if (flags.complete_split) {
            const QkCertificate cert = complete_split_min_qk(sd);
            add(cert, rational_cell(*cert.bound));
        }
    }
    add(certify(d, quasi_kernel_cl(d), "cl"), "-");
    const bool small = inst.split ? inst.split->independent_part().size() <= 20 : n <= 20;
    if (small) {
        const SolveReport report = inst.split ? min_quasi_kernel(*inst.split) : min_quasi_kernel(d);
        add(*report.certificate, "minimum");
    }

    out << "instance " << io::instance_digest(inst) << " n=" << n << " sinks=" << sinks(d).size() << "\n";
    out << std::left << std::setw(24) << "algorithm" << std::setw(18) << "bound" << std::setw(10) << "achieved"
        << "verified\n";
    for (const Row& row : rows) {
        out << std::left << std::setw(24) << row.algorithm << std::setw(18) << row.bound << std::setw(10)
            << row.achieved << (row.verified ? "yes" : "no") << "\n";
    }
    return kSuccess;
}

int cmd_dot(const Settings& s, std::ostream& out) {
    emit(io::to_dot(io::read_instance(s.input)), s.out_path, out);
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Small quasi-kernels in (split) digraphs", "qk"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Check a vertex set or a certificate file against an instance");
    verify->add_option("input", s.input, "Instance file")->required();
    auto* set_opt = verify->add_option("--set", s.set_literal, "Comma-separated vertex list, e.g. 0,4");
    auto* cert_opt = verify->add_option("--cert", s.cert_path, "Certificate JSON to re-verify");
    set_opt->excludes(cert_opt);

    auto* solve_cmd = app.add_subcommand("solve", "Compute a verified quasi-kernel");
    solve_cmd->add_option("input", s.input, "Instance file")->required();
    solve_cmd->add_option("--algo", s.algo, "Algorithm")
        ->check(CLI::IsMember({"auto", "cl", "one-way", "two-thirds", "complete-split", "fpt-k", "fpt-i", "exact"}));
    solve_cmd->add_option("--k", s.k, "Size budget (fpt-k, fpt-i, exact)");
    solve_cmd->add_option("--out", s.out_path, "Write the certificate here instead of stdout");

    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("family", s.family, "dn | dpn | random-split | random-complete-split")
        ->required()
        ->check(CLI::IsMember({"dn", "dpn", "random-split", "random-complete-split"}));
    gen->add_option("--n", s.n, "Family parameter for dn / dpn");
    gen->add_option("--seed", s.seed, "Random seed");
    gen->add_option("--nk", s.nk, "Clique part size");
    gen->add_option("--ni", s.ni, "Independent part size");
    gen->add_option("--p-ki", s.p_ki, "Probability of each K->I arc");
    gen->add_option("--p-ik", s.p_ik, "Probability of each I->K arc");
    gen->add_option("--p-digon", s.p_digon, "Probability that an edge is a digon");
    gen->add_flag("--one-way", s.one_way, "No K->I arcs");
    gen->add_flag("--sink-free", s.sink_free, "Guarantee no sinks");
    gen->add_option("--out", s.out_path, "Output path (default stdout)");

    auto* reduce = app.add_subcommand("reduce", "Build the quasi-kernel gadget for a dominating-set instance");
    reduce->add_option("input", s.input, "Source digraph")->required();
    reduce->add_option("--q", s.q, "Dominating set budget")->required();
    reduce->add_option("--out", s.out_path, "Output path (default stdout)");

    auto* bounds = app.add_subcommand("bounds", "Tabulate every applicable bound against achieved sizes");
    bounds->add_option("input", s.input, "Instance file")->required();

    auto* dot = app.add_subcommand("dot", "Render an instance as Graphviz DOT");
    dot->add_option("input", s.input, "Instance file")->required();
    dot->add_option("--out", s.out_path, "Output path (default stdout)");

    std::vector<const char*> argv{"qk"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "qk: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (verify->parsed()) {
            if (set_opt->count() == 0 && cert_opt->count() == 0) throw InvalidInput("verify needs --set or --cert");
            return cmd_verify(s, out, err);
        }
        if (solve_cmd->parsed()) return cmd_solve(s, out, err);
        if (gen->parsed()) return cmd_gen(s, out);
        if (reduce->parsed()) return cmd_reduce(s, out);
        if (bounds->parsed()) return cmd_bounds(s, out);
        if (dot->parsed()) return cmd_dot(s, out);
    } catch (const io::ParseError& e) {
        err << "qk: " << s.input << ": " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        err << "qk: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

} // namespace qk::cli
