#include "starsemi/ints.hpp"

#include <algorithm>

namespace starsemi {

std::string to_string(Int v) {
    unsigned __int128 u;
    bool neg = v < Int(0);
    if (neg) {
        u = static_cast<unsigned __int128>(-(v.value() + 1)) + 1;
    } else {
        u = static_cast<unsigned __int128>(v.value());
    }
    std::string digits;
    do {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    } while (u != 0);
    if (neg) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int parse_int(std::string_view text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i >= text.size()) throw ParseError(i, "expected digits");
    Int value(0);
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw ParseError(i, "expected digit");
        value = value * Int(10) + Int(text[i] - '0');
    }
    return neg ? -value : value;
}

Int gcd(Int a, Int b) {
    a = abs(a);
    b = abs(b);
    while (!(b == Int(0))) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm(Int a, Int b) {
    if (a == Int(0) || b == Int(0)) return Int(0);
    Int g = gcd(a, b);
    return abs(a / g * b);
}

Int floor_div(Int num, Int den) {
    if (den <= Int(0)) throw Error("floor_div: denominator must be positive");
    Int q = num / den;
    Int r = num % den;
    if (r < Int(0)) q = q - Int(1);
    return q;
}

Int ceil_div(Int num, Int den) {
    if (den <= Int(0)) throw Error("ceil_div: denominator must be positive");
    Int q = num / den;
    Int r = num % den;
    if (r > Int(0)) q = q + Int(1);
    return q;
}

Int mod_floor(Int a, Int m) {
    if (m < Int(1)) throw Error("mod_floor: modulus must be >= 1");
    Int r = a % m;
    if (r < Int(0)) r = r + m;
    return r;
}

Int mod_inverse(Int a, Int m) {
    if (m < Int(1)) throw Error("mod_inverse: modulus must be >= 1");
    // Extended Euclid on (a mod m, m).
    Int r0 = mod_floor(a, m), r1 = m;
    Int s0(1), s1(0);
    while (!(r1 == Int(0))) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (!(r0 == Int(1))) {
        throw Error("mod_inverse: " + to_string(a) + " is not invertible modulo " + to_string(m));
    }
    return mod_floor(s0, m);
}

Int checked_pow(Int base, Int exp) {
    if (exp < Int(0)) throw Error("checked_pow: negative exponent");
    Int result(1);
    Int b = base;
    Int e = exp;
    while (e > Int(0)) {
        if (!((e % Int(2)) == Int(0))) result = result * b;
        e = e / Int(2);
        if (e > Int(0)) b = b * b;
    }
    return result;
}

}  // namespace starsemi
