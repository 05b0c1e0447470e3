#include "pigraph/counting.hpp"

namespace pigraph {

bignum binomial(long long r, long long s) {
    if (r < 0 || s < 0 || r < s) return 0;
    bignum out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(r),
                 static_cast<unsigned long>(s));
    return out;
}

std::string to_string(const bignum& v) {
    return v.get_str();
}

} // namespace pigraph
