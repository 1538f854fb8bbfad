// Command-line front end: classification, censuses, field utilities, the
// Fibonacci quaternion ring, and the invertible-element block cipher.
//
// Exit codes: 0 success, 1 domain errors (non-prime modulus, non-invertible
// key, carrier not closed, ...), 2 flag or format errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cdzp/cdzp.hpp"

namespace {

struct Options {
    std::uint32_t p = 0;
    std::uint32_t t = 0;
    std::int64_t a = 0;
    std::uint64_t seed = 0;
    std::uint64_t limit = 1'000'000;
    std::uint64_t bound = 0;  // 0 = module default
    std::string elem;
    std::string key;
    std::string text;
    bool json = false;
};

void run_classify(const Options& o) {
    cdzp::Algebra alg(cdzp::Prime(o.p), o.t);
    cdzp::Element z = cdzp::parse_element(alg, o.elem);
    cdzp::PotencyReport rep = cdzp::classify_structured(z);
    if (o.json) {
        cdzp::ojson j;
        j["element"] = cdzp::to_coeff_string(z);
        j["display"] = cdzp::to_display_string(z);
        j["p"] = alg.p();
        j["t"] = alg.level();
        j["report"] = cdzp::to_json(rep);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << cdzp::report_text(z, rep);
    }
}

void run_enumerate(const Options& o) {
    cdzp::Algebra alg(cdzp::Prime(o.p), o.t);
    std::optional<std::uint64_t> bound;
    if (o.bound != 0) bound = o.bound;
    cdzp::Census census = cdzp::enumerate_classify(alg, o.limit, bound);
    if (o.json)
        std::cout << cdzp::to_json(census).dump(2) << "\n";
    else
        std::cout << cdzp::census_text(census);
}

void run_order(const Options& o) {
    cdzp::Prime p(o.p);
    std::cout << cdzp::mul_order(cdzp::Residue::from_int(o.a, p)) << "\n";
}

void run_two_squares(const Options& o) {
    cdzp::Prime p(o.p);
    cdzp::Residue a = cdzp::Residue::from_int(o.a, p);
    auto [s, t] = cdzp::sum_two_squares(a);
    std::cout << a.value() << " = " << s.value() << "^2 + " << t.value()
              << "^2 (mod " << o.p << ")\n";
}

void run_pisano(const Options& o) {
    std::cout << cdzp::pisano(o.p) << "\n";
}

void run_fib_ring(const Options& o) {
    cdzp::Prime p(o.p);
    cdzp::FibQuatSet set = cdzp::FibQuatSet::build(p);
    bool norms_ok = true;
    for (std::size_t n = 0; n < set.period(); ++n)
        norms_ok = norms_ok && cdzp::norm_identity_check(n, p);

    if (!o.json) {
        std::cout << "p=" << o.p << " pisano=" << set.period()
                  << " distinct=" << set.members.size() << "\n";
        for (std::size_t n = 0; n < set.period(); ++n) {
            const cdzp::Element& f = set.at(n);
            std::cout << "F" << n << " = " << cdzp::to_display_string(f)
                      << " (" << cdzp::to_coeff_string(f) << ")\n";
        }
        std::cout << "norm identity: " << (norms_ok ? "ok" : "FAILED")
                  << "\n";
    }

    cdzp::RingTables tables = cdzp::build_tables(p);  // throws NotClosed
    cdzp::RingReport report = cdzp::ring_verify(tables);

    if (o.json) {
        cdzp::ojson j = cdzp::to_json(tables, report);
        j["norm_identity"] = norms_ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "closure: closed\n\n";
        std::cout << cdzp::ring_tables_text(tables) << "\n";
        std::cout << cdzp::ring_report_text(tables, report);
    }
}

void run_keygen(const Options& o) {
    cdzp::Algebra alg(cdzp::Prime(o.p), o.t);
    std::cout << cdzp::keygen(alg, o.seed).serialize() << "\n";
}

void run_encrypt(const Options& o) {
    cdzp::CipherKey key = cdzp::CipherKey::parse(o.key);
    std::cout << cdzp::encrypt(o.text, key) << "\n";
}

void run_decrypt(const Options& o) {
    cdzp::CipherKey key = cdzp::CipherKey::parse(o.key);
    std::cout << cdzp::decrypt(o.text, key) << "\n";
}

void run_tables(const Options& o) {
    cdzp::Algebra alg(cdzp::Prime(o.p), o.t);
    std::cout << cdzp::basis_table_text(cdzp::BasisTable(alg));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley-Dickson algebras over Z_p: element classification, "
                 "Fibonacci quaternions, and a block cipher on invertible "
                 "elements"};
    app.require_subcommand(1);
    Options o;

    auto add_p = [&o](CLI::App* cmd) {
        cmd->add_option("--p", o.p, "odd prime modulus")->required();
    };
    auto add_pt = [&o, &add_p](CLI::App* cmd) {
        add_p(cmd);
        cmd->add_option("--t", o.t, "doubling level (dimension 2^t)")
            ->required();
    };

    CLI::App* classify = app.add_subcommand(
        "classify", "classify one element (zero/nilpotent/k-potent)");
    add_pt(classify);
    classify->add_option("--elem", o.elem, "comma-separated coefficients")
        ->required();
    classify->add_flag("--json", o.json, "emit JSON");

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "census of a whole algebra by brute force");
    add_pt(enumerate);
    enumerate->add_option("--limit", o.limit,
                          "largest element space to enumerate");
    enumerate->add_option("--bound", o.bound,
                          "iteration bound (default p^2 + 1)");
    enumerate->add_flag("--json", o.json, "emit JSON");

    CLI::App* order =
        app.add_subcommand("order", "multiplicative order in Z_p^*");
    add_p(order);
    order->add_option("--a", o.a, "element of Z_p")->required();

    CLI::App* two_squares = app.add_subcommand(
        "two-squares", "write a as a sum of two squares in Z_p");
    add_p(two_squares);
    two_squares->add_option("--a", o.a, "element of Z_p")->required();

    CLI::App* pisano_cmd =
        app.add_subcommand("pisano", "period of the Fibonacci sequence mod p");
    pisano_cmd->add_option("--p", o.p, "modulus (>= 2)")->required();

    CLI::App* fib_ring = app.add_subcommand(
        "fib-ring", "Fibonacci quaternions mod p and their ring tables");
    add_p(fib_ring);
    fib_ring->add_flag("--json", o.json, "emit JSON");

    CLI::App* keygen_cmd =
        app.add_subcommand("keygen", "deterministic invertible key");
    add_pt(keygen_cmd);
    keygen_cmd->add_option("--seed", o.seed, "generator seed")->required();

    CLI::App* encrypt_cmd =
        app.add_subcommand("encrypt", "encrypt text with a serialized key");
    encrypt_cmd->add_option("--key", o.key, "key as p,t:c0,c1,...")
        ->required();
    encrypt_cmd->add_option("--text", o.text, "plaintext")->required();

    CLI::App* decrypt_cmd =
        app.add_subcommand("decrypt", "decrypt text with a serialized key");
    decrypt_cmd->add_option("--key", o.key, "key as p,t:c0,c1,...")
        ->required();
    decrypt_cmd->add_option("--text", o.text, "ciphertext")->required();

    CLI::App* tables_cmd =
        app.add_subcommand("tables", "basis product table of an algebra");
    add_pt(tables_cmd);

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

    try {
        if (app.got_subcommand(classify)) run_classify(o);
        else if (app.got_subcommand(enumerate)) run_enumerate(o);
        else if (app.got_subcommand(order)) run_order(o);
        else if (app.got_subcommand(two_squares)) run_two_squares(o);
        else if (app.got_subcommand(pisano_cmd)) run_pisano(o);
        else if (app.got_subcommand(fib_ring)) run_fib_ring(o);
        else if (app.got_subcommand(keygen_cmd)) run_keygen(o);
        else if (app.got_subcommand(encrypt_cmd)) run_encrypt(o);
        else if (app.got_subcommand(decrypt_cmd)) run_decrypt(o);
        else if (app.got_subcommand(tables_cmd)) run_tables(o);
    } catch (const cdzp::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cdzp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
