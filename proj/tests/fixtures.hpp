#pragma once

#include <string_view>

namespace e5proof::fixture {

// E5 as a product of 26 fourth powers, whitespace removed.
inline constexpr std::string_view e5_proof =
    "BBBBAbabABa(bAbAbAbA)(aBaBaaBaBaaBaBaaBaBa)Ab(AbAAbAAbAAbA)aBaaBa"
    "(bAAbAAbAAbAA)(aaBaaaBaaaBaaaBa)AbAAAb(AAAA)(abABBabABBabABBabABB)"
    "(bbbb)BBaBAb(baBAbaBAbaBAbaBA)abABabA(BBBB)b(bbabAbbabAbbabAbbabA)"
    "aBAB(BaBABaBABaBABaBA)abAbabA(bbbb)B(BBabABBabABBabABBabA)aBAbbaBA"
    "(bbbb)(BBaBBaBBaBBa)A(bbbb)B(AAAA)b(AAAA)aa(aaBaaBaaBaaB)bA"
    "(AbAbAbAb)BaB(aBAbaaBAbaaBAbaaBAba)ABabAAB(aaaa)A(AAbAAbAAbAAb)"
    "B(aaaa)(ABABABAB)babaaBAbabABabAbaBABaBAbabABaBAbaBABabbbbb";

}  // namespace e5proof::fixture
