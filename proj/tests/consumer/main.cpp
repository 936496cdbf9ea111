#include <iostream>

#include <maskit/maskit.hpp>

int main() {
    const auto p = maskit::trace_poly(maskit::parse_word("aTAt"));
    std::cout << p.str() << '\n';
    return p.str() == "4*t2^2 + 2" ? 0 : 1;
}
