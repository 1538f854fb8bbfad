// Tour of the library: arithmetic, classification, the Fibonacci
// quaternions, and one cipher round trip. Builds with the test suite and
// doubles as a smoke test; exits nonzero if anything looks off.
#include <iostream>

#include "cdzp/cdzp.hpp"

int main() {
    using namespace cdzp;

    // Quaternions over Z_5: multiply, conjugate, take trace and norm.
    Algebra quat(Prime(5), 2);
    Element z(quat, {2, 1, 1, 1});
    std::cout << "z       = " << to_display_string(z) << "\n";
    std::cout << "z^2     = " << to_display_string(z * z) << "\n";
    std::cout << "conj(z) = " << to_display_string(z.conj()) << "\n";
    std::cout << "trace " << z.trace().value() << ", norm "
              << z.norm().value() << "\n\n";

    // The structured classifier finds the smallest k with z^k = z.
    PotencyReport report = classify_structured(z);
    std::cout << report_text(z, report) << "\n";
    if (report.k != potency_index_iterative(z)) return 1;

    // Fibonacci quaternions close into a finite ring exactly at p = 3.
    std::cout << "pisano(3) = " << pisano(3) << "\n";
    std::cout << "F6 mod 3  = " << to_display_string(fib_quat(6, Prime(3)))
              << "\n\n";

    // Invertible quaternions over Z_29 act block-wise on 29-symbol text.
    CipherKey key(Element(Algebra(Prime(29), 2), {18, 8, 13, 4}));
    std::string cipher = encrypt("MATHEMATICS", key);
    std::cout << "encrypt(\"MATHEMATICS\") = \"" << cipher << "\"\n";
    std::cout << "decrypt back           = \"" << decrypt(cipher, key)
              << "\"\n";
    return decrypt(cipher, key) == "MATHEMATICSA" ? 0 : 1;
}
