// Prints the Grunsky coefficients up to a weight and checks them against the
// logarithmic expansion.

#include "univ/univ.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    const int weight = argc > 1 ? std::atoi(argv[1]) : 6;
    const univ::GrunskyTable table = univ::grunsky_table(weight);
    for (const auto& [key, poly] : table.entries) {
        std::cout << "beta(" << key.first << "," << key.second << ") = " << poly.to_string() << '\n';
    }
    const bool agree = table == univ::grunsky_oracle(weight);
    std::cout << (agree ? "matches" : "differs from") << " the log expansion\n";
    return agree ? 0 : 1;
}
