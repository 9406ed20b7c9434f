#include "lie3/catalog.hpp"

#include "lie3/derivation.hpp"
#include "lie3/errors.hpp"
#include "lie3/io.hpp"
#include "lie3/tensor.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <tuple>

namespace lie3 {

Rat Params::get(const std::string& name) const {
  if (name == "alpha" || name == "a") return alpha;
  if (name == "beta" || name == "b") return beta;
  if (name == "s") return s;
  if (name == "t") return t;
  if (name == "u") return u;
  throw ParamError("unknown parameter '" + name + "'");
}

void Params::set(const std::string& name, Rat value) {
  if (name == "alpha" || name == "a")
    alpha = std::move(value);
  else if (name == "beta" || name == "b")
    beta = std::move(value);
  else if (name == "s")
    s = std::move(value);
  else if (name == "t")
    t = std::move(value);
  else if (name == "u")
    u = std::move(value);
  else
    throw ParamError("unknown parameter '" + name + "'");
}

namespace {

// ---------------------------------------------------------------------------
// Fixture data. One block per case:
//   case <id>
//   dim <n>
//   table <name>            (omitted when the case has no printed table)
//   require <param>         (parameter must be nonzero)
//   witness <s1> ... <sn>   (pinned eigenspace split, entries + or -)
//   note <text>
//   alg i j k = <expr>      (structure constants used by the pipeline)
//   mu A B C = <expr>       (printed semidirect table; A/B/C like 2 or 1*)
//   delta T = <expr>        (printed coproduct; wedge terms a^b^c)
//   end
// Printed tables are stored verbatim, duplicated and ill-formed lines
// included; the comparator classifies them instead of correcting them.
const char* kFixtures = R"(
case 4-b1
dim 4
table mu1
witness + + + -
alg 2 3 4 = x1
mu 2 3 4 = x1
mu 2 3 1* = -x4*
mu 2 4 1* = x3*
mu 3 4 1* = -x2*
delta 1* = x2*^x4*^x3*
delta 2 = x1^x3*^x4*
delta 3 = x1^x4*^x2*
delta 4 = x1^x2*^x3*
end

case 4-b2
dim 4
table mu2
alg 1 2 3 = x1
mu 1 2 3 = x1
mu 1 2 1* = -x3*
mu 2 3 1* = -x1*
mu 1 3 1* = x2*
delta 1* = x1*^x3*^x2*
delta 1 = x1^x2*^x3*
delta 2 = x1^x3*^x1
delta 3 = x1^x1*^x2*
end

case 4-c1
dim 4
table mu3
alg 2 3 4 = x1
alg 1 3 4 = x2
mu 2 3 4 = x1
mu 1 3 4 = x2
mu 2 3 1* = -x4*
mu 3 4 1* = -x2*
mu 2 4 1* = x3*
mu 1 3 2* = -x4*
mu 1 4 2* = x3*
mu 3 4 2* = -x1*
delta 1* = x2*^x4*^x3*
delta 2* = x1*^x4*^x3*
delta 1 = x2^x3*^x4*
delta 2 = x1^x3*^x4*
delta 3 = x1^x4*^x2* + x2^x4*^x1*
delta 4 = x1^x2*^x3* + x1*^x3*^x2
end

case 4-c2
dim 4
table mu4
require a
note source bracket [x1,x3,x4] prints "e2"; read as x2
alg 2 3 4 = a*x1 + x2
alg 1 3 4 = x2
mu 2 3 4 = a*x1 + x2
mu 1 3 4 = x2
mu 2 3 1* = -a*x4*
mu 2 3 2* = -x4*
mu 2 4 1* = a*x3*
mu 2 4 2* = x3*
mu 3 4 1* = -a*x2*
mu 3 4 2* = -x1* - x2*
mu 1 3 2* = -x4*
mu 1 4 2* = x3*
delta 1* = a*x3*^x2*^x4*
delta 2* = x1*^x4*^x3* + x2*^x4*^x3*
delta 1 = x2^x3*^x4*
delta 2 = a*x1^x3*^x4* + x3*^x4*^x2
delta 3 = a*x1^x4*^x2* + x2^x4*^x2* + x1*^x2^x4*
delta 4 = a*x1^x2*^x3* + x2^x2*^x3* + x1*^x3*^x2
end

case 4-c3
dim 4
table mu5
alg 1 3 4 = x1
alg 2 3 4 = x2
mu 1 3 4 = x1
mu 2 3 4 = x2
mu 1 3 1* = -x4*
mu 1 4 1* = x3*
mu 3 4 1* = -x1*
mu 2 3 2* = -x4*
mu 2 4 2* = x3*
mu 3 4 2* = -x2*
delta 1* = x1*^x4*^x3*
delta 2* = x2*^x4*^x3*
delta 1 = x1^x3*^x4*
delta 2 = x2^x3*^x4*
delta 3 = x1^x4*^x1* + x2^x4*^x2*
delta 4 = x1^x1*^x3* + x2^x2*^x3*
end

case 4-d1
dim 4
table mu6
note source classification prints [x1,x2,x3]=x3, which fails the Filippov identity; the table's [x1,x2,x4]=x3 is used
alg 2 3 4 = x1
alg 1 3 4 = x2
alg 1 2 4 = x3
mu 2 3 4 = x1
mu 1 3 4 = x2
mu 1 2 4 = x3
mu 2 3 1* = -x4*
mu 3 4 1* = -x2*
mu 2 4 1* = x3*
mu 1 3 2* = -x4*
mu 1 4 2* = x3*
mu 3 4 2* = -x1*
mu 1 2 3* = -x4*
mu 1 4 3* = x2*
mu 2 4 3* = -x1*
delta 1* = x2*^x4*^x3*
delta 2* = x1*^x4*^x3*
delta 3* = x1*^x4*^x2*
delta 1 = x2^x3*^x4* + x2*^x4*^x3
delta 2 = x1^x3*^x4* + x4*^x1*^x3
delta 3 = x4*^x2*^x1 + x4*^x1*^x2
delta 4 = x1*^x3*^x2 + x1*^x2*^x3 + x1^x2*^x3*
end

case 4-e1
dim 4
table mu7
witness + - + -
alg 2 3 4 = -x2
alg 1 3 4 = x1
alg 1 2 3 = x3
alg 1 2 4 = -x4
mu 2 3 4 = -x2
mu 1 3 4 = x1
mu 1 2 3 = x3
mu 1 2 4 = -x4
mu 2 3 2* = x4*
mu 3 4 2* = x2*
mu 2 4 2* = -x3*
mu 1 3 1* = -x4*
mu 3 4 1* = -x1*
mu 1 4 1* = x3*
mu 1 2 3* = -x3*
mu 1 3 3* = x2*
mu 2 3 3* = -x1*
mu 1 2 4* = x4*
mu 1 4 4* = -x2*
mu 2 4 4* = x1*
delta 1* = x1*^x4*^x3*
delta 2* = x2*^x3*^x4*
delta 3* = x1*^x3*^x2*
delta 4* = x1*^x2*^x4*
delta 1 = x1^x3*^x4* + x2*^x3*^x3 + x4*^x2*^x4
delta 2 = x2^x4*^x3* + x3*^x1*^x3 + x1*^x4*^x4
delta 3 = x4*^x1*^x1 + x2*^x4*^x2 + x1*^x2*^x3
delta 4 = x3*^x2*^x2 + x1*^x3*^x1 + x4^x2*^x1*
delta 4* = 0
end

case 5-b1
dim 5
table psi1
alg 2 3 4 = x1
mu 2 3 4 = x1
mu 2 3 1* = -x4*
mu 3 4 1* = -x2*
mu 2 4 1* = x3*
delta 1* = x2*^x4*^x3*
delta 2 = x1^x3*^x4*
delta 3 = x1^x4*^x2*
delta 4 = x1^x2*^x3*
end

case 5-b2
dim 5
table psi17
alg 1 2 3 = x1
mu 1 2 3 = x1
mu 1 2 1* = -x3*
mu 2 3 1* = -x1*
mu 1 3 1* = x2*
delta 1* = x1*^x3*^x2*
delta 1 = x1^x2*^x3*
delta 2 = x3*^x1*^x1
delta 3 = x1*^x2*^x1
end

case 5-c1
dim 5
table psi2
alg 2 3 4 = x1
alg 3 4 5 = x2
mu 2 3 4 = x1
mu 3 4 5 = x2
mu 2 3 1* = -x4*
mu 2 4 1* = x3*
mu 3 4 1* = -x2*
mu 3 4 2* = -x5*
mu 4 5 2* = -x3*
mu 3 5 2* = x4*
delta 1* = x2*^x4*^x3*
delta 2* = x3*^x5*^x4*
delta 2 = x1^x3*^x4*
delta 3 = x1^x4*^x2* + x2^x4*^x5*
delta 4 = x1^x2*^x3* + x5*^x3*^x2
delta 5 = x2^x3*^x4*
end

case 5-c2
dim 5
table psi3
alg 2 3 4 = x1
alg 2 4 5 = x2
alg 1 4 5 = x1
mu 2 3 4 = x1
mu 2 4 5 = x2
mu 1 4 5 = x1
mu 2 3 1* = -x4*
mu 2 4 1* = x3*
mu 3 4 1* = -x2*
mu 2 4 2* = -x5*
mu 2 5 2* = x4*
mu 4 5 2* = -x2*
mu 1 4 1* = -x5*
mu 4 5 1* = -x1*
mu 1 5 1* = x4*
delta 1* = x1*^x5*^x4* + x2*^x4*^x3*
delta 2* = x2*^x5*^x4*
delta 1 = x1^x4*^x5*
delta 2 = x1^x3*^x4* + x2^x4*^x5*
delta 3 = x1^x4*^x2*
delta 4 = x1^x2*^x3* + x2^x5*^x2* + x5*^x1*^x1
delta 5 = x2*^x4*^x2 + x1*^x4*^x1
end

case 5-c3
dim 5
table psi15
alg 2 3 4 = x1
alg 1 3 4 = x2
mu 2 3 4 = x1
mu 1 3 4 = x2
mu 2 3 1* = -x4*
mu 3 4 1* = -x2*
mu 2 4 1* = x3*
mu 1 3 2* = -x4*
mu 3 4 2* = -x1*
mu 1 4 2* = x3*
delta 1* = x2*^x4*^x3*
delta 2* = x1*^x4*^x3*
delta 1 = x2^x3*^x4*
delta 2 = x1^x3*^x4*
delta 3 = x1^x4*^x2* + x1*^x2^x4*
delta 4 = x1^x2*^x3* + x1*^x3*^x2
end

case 5-c4
dim 5
table psi6
alg 2 3 4 = x1
alg 1 3 4 = x2
alg 2 4 5 = x2
alg 1 4 5 = x1
mu 2 3 4 = x1
mu 1 3 4 = x2
mu 2 4 5 = x2
mu 1 4 5 = x1
mu 2 3 1* = -x4*
mu 2 4 1* = x3*
mu 3 4 1* = -x2*
mu 1 3 2* = -x4*
mu 3 4 2* = -x1*
mu 1 4 2* = x3*
mu 2 4 2* = -x5*
mu 4 5 2* = -x2*
mu 2 5 2* = x4*
mu 1 4 1* = -x5*
mu 4 5 1* = -x1*
mu 1 5 2* = x4*
delta 1* = x2*^x4*^x3* + x1*^x5*^x4*
delta 2* = x1*^x4*^x3* + x2*^x5*^x4*
delta 1 = x1^x4*^x5* + x2^x3*^x4*
delta 2 = x1^x3*^x4* + x2^x4*^x5*
delta 3 = x1^x4*^x2* + x2^x4*^x1*
delta 4 = x1^x2*^x3* + x2^x1*^x3* + x5*^x2*^x2 + x5*^x1*^x1
delta 5 = x2*^x4*^x2 + x1*^x4*^x1
end

case 5-c5
dim 5
table psi5
require a
note source classification prints [x2,x3,x4]=x1, [x2,x4,x5]=a*x1+x2, which fails the Filippov identity; the algebra of the printed table is used
alg 2 3 4 = a*x1 + x2
alg 1 3 4 = x2
mu 2 3 4 = a*x1 + x2
mu 1 3 4 = x2
mu 2 3 1* = -a*x4*
mu 3 4 1* = -a*x2*
mu 2 4 1* = a*x3*
mu 2 3 2* = -x4*
mu 2 4 2* = x3*
mu 3 4 2* = -x2* - x1*
mu 1 3 2* = -x4*
mu 1 4 2* = x3*
delta 1* = a*x2*^x4*^x3*
delta 2* = x1*^x4*^x3* + x2*^x4*^x3*
delta 1 = a*x2^x3*^x4*
delta 2 = x1^x3*^x4* + x2^x3*^x4*
delta 3 = x1*^x2^x4* + x2^x4*^x2* + a*x1^x4*^x2*
delta 4 = x1*^x3*^x2 + a*x1^x2*^x3* + x2^x2*^x3*
end

case 5-c6
dim 5
table psi4
require a
alg 2 3 4 = a*x1 + x2
alg 1 3 4 = x2
alg 2 4 5 = x2
alg 1 4 5 = x1
mu 2 3 4 = a*x1 + x2
mu 1 3 4 = x2
mu 2 4 5 = x2
mu 1 4 5 = x1
mu 2 3 1* = -a*x4*
mu 2 4 1* = a*x3*
mu 3 4 1* = -a*x2*
mu 2 3 2* = -x4*
mu 2 4 2* = x3*
mu 3 4 2* = -x2*
mu 1 3 2* = -x4*
mu 1 4 2* = x3*
mu 3 4 2* = -x1*
mu 2 4 2* = -x5*
mu 4 5 2* = -x2*
mu 2 5 2* = x4*
mu 1 4 1* = -x5*
mu 4 5 1* = -x1*
mu 1 5 1* = x4*
delta 1* = x1*^x5*^x4* + a*x2*^x4*^x3*
delta 2* = x2*^x4*^x3* + x1*^x4*^x3* + x2*^x5*^x4*
delta 1 = x2^x3*^x4* + x1^x4*^x5*
delta 2 = a*x1^x3*^x4* + x2^x3*^x4* + x2^x4*^x5*
delta 3 = a*x1^x4*^x2* + x2^x4*^x2* + x2^x4*^x1*
delta 4 = a*x1^x2*^x3* + x2^x2*^x3* + x1*^x3*^x2 + x5*^x2*^x2 + x5*^x1*^x1
delta 5 = x2*^x4*^x2 + x1*^x4*^x1
end

case 5-c7
dim 5
table psi8
alg 1 3 4 = x1
alg 2 3 4 = x2
mu 2 3 4 = x2
mu 1 3 4 = x1
mu 1 3 1* = -x4*
mu 1 4 1* = x3*
mu 3 4 1* = -x1*
mu 2 3 2* = -x4*
mu 2 4 2* = x3*
mu 3 4 2* = -x2*
delta 1* = x1*^x4*^x3*
delta 1 = x1^x3*^x4*
delta 2 = x2^x3*^x4*
delta 3 = x1^x4*^x1* + x2^x4*^x2*
delta 4 = x1^x1*^x3* + x2^x2*^x3*
delta 2* = x2*^x4*^x3*
end

case 5-d1
dim 5
table psi7
note source classification has [x2,x4,x5]=-x2; the table prints +x2, which fails the Filippov identity, so the classification's sign is used
alg 2 3 4 = x1
alg 2 4 5 = -x2
alg 3 4 5 = x3
mu 2 3 4 = x1
mu 2 4 5 = x2
mu 3 4 5 = x3
mu 2 3 1* = -x4*
mu 2 4 1* = x3*
mu 3 4 1* = -x2*
mu 2 4 2* = -x5*
mu 4 5 2* = -x2*
mu 2 5 2* = x4*
mu 3 4 3* = -x5*
mu 4 5 3* = -x3*
mu 3 5 3* = x4*
delta 1* = x2*^x4*^x3*
delta 2* = x2*^x5*^x4*
delta 3* = x3*^x5*^x4*
delta 2 = x1^x3*^x4* + x2^x4*^x5*
delta 3 = x1^x4*^x2* + x3^x4*^x5*
delta 4 = x1^x2*^x3* + x2^x5*^x2* + x3^x5*^x3*
delta 5 = x2^x2*^x4* + x3^x3*^x4*
end

case 5-d2
dim 5
table psi9
note source classification lists only [x2,x3,x4]=x1 and [x3,x4,x5]=a*x2+x3, which fails the Filippov identity; the table's extra brackets [x2,x4,x5]=x3 and [x1,x4,x5]=x1 close it and are used
alg 2 3 4 = x1
alg 3 4 5 = x3 + a*x2
alg 2 4 5 = x3
alg 1 4 5 = x1
mu 2 3 4 = x1
mu 3 4 5 = x3 + a*x2
mu 2 4 5 = x3
mu 1 4 5 = x1
mu 2 3 1* = -x4*
mu 2 4 1* = x3*
mu 3 4 1* = -x2*
mu 3 4 3* = -x5*
mu 4 5 3* = -x3*
mu 3 5 3* = x4*
mu 3 4 2* = -a*x5*
mu 4 5 2* = -a*x3*
mu 3 5 2* = a*x4*
mu 2 4 3* = -x5*
mu 4 5 3* = -x2*
mu 2 5 3* = x4*
mu 1 4 1* = -x5*
mu 4 5 1* = -x1*
mu 1 5 1* = x4*
delta 1* = x3*^x2*^x4* + x4*^x1*^x5*
delta 2* = a*x4*^x3*^x5*
delta 3* = x4*^x3*^x5* + x4*^x2*^x5*
delta 1 = x1^x4*^x5*
delta 2 = x1^x3*^x4* + x3^x4*^x5*
delta 3 = x1^x4*^x2* + a*x2^x4*^x5* + x3^x4*^x5*
delta 4 = x1^x2*^x3* + x3^x5*^x3* + a*x2^x5*^x3* + x3^x5*^x2* + x1^x5*^x1*
delta 5 = x3*^x4*^x3 + a*x3*^x4*^x2 + x2*^x4*^x3 + x1*^x4*^x1
end

case 5-d3
dim 5
table psi10
note source classification has [x1,x4,x5]=2*x1; the table prints 2*x2, which fails the Filippov identity, so the classification's value is used
alg 2 3 4 = x1
alg 3 4 5 = x3
alg 2 4 5 = x2
alg 1 4 5 = 2*x1
mu 2 3 4 = x1
mu 3 4 5 = x3
mu 2 4 5 = x2
mu 1 4 5 = 2*x2
mu 2 3 1* = -x4*
mu 3 4 1* = -x2*
mu 2 4 1* = x3*
mu 3 4 3* = -x5*
mu 4 5 3* = -x3*
mu 3 5 3* = x4*
mu 2 4 2* = -x5*
mu 4 5 2* = -x2*
mu 2 5 2* = x4*
mu 1 4 2* = -2*x5*
mu 4 5 2* = -2*x1*
mu 1 5 2* = 2*x4*
delta 1* = x3*^x2*^x4*
delta 2* = x4*^x2*^x5* + 2*x4*^x1*^x5*
delta 3* = x4*^x3*^x5*
delta 1 = 2*x2^x4*^x5*
delta 2 = x1^x3*^x4* + x2^x4*^x5*
delta 3 = x1^x4*^x2* + x3^x4*^x5*
delta 4 = x1^x2*^x3* + x3^x5*^x3* + x2^x5*^x2* + 2*x2^x5*^x1*
delta 5 = x3^x3*^x4* + x2^x2*^x4* + 2*x2^x1*^x4*
end

case 5-d4
dim 5
table psi11
alg 2 3 4 = x1
alg 1 3 4 = x2
alg 1 2 4 = x3
mu 2 3 4 = x1
mu 1 3 4 = x2
mu 1 2 4 = x3
mu 2 3 1* = -x4*
mu 3 4 1* = -x2*
mu 2 4 1* = x3*
mu 1 3 2* = -x4*
mu 3 4 2* = -x1*
mu 1 4 2* = x3*
mu 1 4 3* = x2*
mu 1 2 3* = -x4*
mu 2 4 3* = -x1*
delta 1* = x3*^x2*^x4*
delta 2* = x3*^x1*^x4*
delta 3* = x2*^x1*^x4*
delta 1 = x2^x3*^x4* + x3^x2*^x4*
delta 2 = x1^x3*^x4* + x3^x4*^x1*
delta 3 = x1^x4*^x2* + x2^x4*^x1*
delta 4 = x1^x2*^x3* + x2^x1*^x3* + x3^x1*^x2*
end

case 5-d5
dim 5
table psi12
require b
note table prints psi12(x1,x2,x5)=x1, inconsistent with its own coadjoint lines; the classification's [x1,x4,x5]=x1 is used
alg 1 4 5 = x1
alg 2 4 5 = x3
alg 3 4 5 = b*x2 + (1+b)*x3
mu 1 2 5 = x1
mu 2 4 5 = x3
mu 3 4 5 = b*x2 + (1+b)*x3
mu 1 4 1* = -x5*
mu 4 5 1* = -x1*
mu 1 5 1* = x4*
mu 2 4 3* = -x5*
mu 4 5 3* = -x2*
mu 2 5 3* = x4*
mu 3 4 2* = -b*x5*
mu 4 5 2* = -b*x3*
mu 3 5 2* = b*x4*
mu 3 4 3* = -(1+b)*x5*
mu 4 5 3* = -(1+b)*x3*
mu 3 5 3* = (1+b)*x4*
delta 1* = x4*^x1*^x5*
delta 2* = b*x4*^x3*^x5*
delta 3* = x4*^x2*^x5* + (1+b)*x4*^x3*^x5*
delta 1 = x1^x4*^x5*
delta 2 = x3^x4*^x5*
delta 3 = b*x2^x4*^x5* + (1+b)*x3^x4*^x5*
delta 4 = x1^x5*^x1* + x3^x5*^x2* + b*x2^x5*^x3* + (1+b)*x3^x5*^x3*
delta 5 = x1^x1*^x4* + x3^x2*^x4* + b*x2^x3*^x4* + (1+b)*x3^x3*^x4*
end

case 5-d6
dim 5
table psi13
alg 1 4 5 = x1
alg 2 4 5 = x2
alg 3 4 5 = x3
mu 1 4 5 = x1
mu 2 4 5 = x2
mu 3 4 5 = x3
mu 1 4 1* = -x5*
mu 4 5 1* = -x1*
mu 1 5 1* = x4*
mu 2 4 2* = -x5*
mu 4 5 2* = -x2*
mu 2 5 2* = x4*
mu 3 4 3* = -x5*
mu 4 5 3* = -x3*
mu 3 5 3* = x4*
delta 1* = x4*^x1*^x5*
delta 2* = x4*^x2*^x5*
delta 3* = x4*^x3*^x5*
delta 1 = x1^x4*^x5*
delta 2 = x2^x4*^x5*
delta 3 = x3^x4*^x5*
delta 4 = x5*^x1*^x1 + x5*^x2*^x2 + x5*^x3*^x3
delta 5 = x1*^x4*^x1 + x2*^x4*^x2 + x3*^x4*^x3
end

case 5-d7
dim 5
table psi14
require s
alg 1 4 5 = x2
alg 2 4 5 = x3
alg 3 4 5 = s*x1 + t*x2 + u*x3
mu 1 4 5 = x2
mu 2 4 5 = x3
mu 3 4 5 = s*x1 + t*x2 + u*x3
mu 1 4 2* = -x5*
mu 4 5 2* = -x1*
mu 1 5 2* = x4*
mu 2 4 3* = -x5*
mu 4 5 3* = -x2*
mu 2 5 3* = x4*
mu 3 4 1* = -s*x5*
mu 4 5 1* = -s*x3*
mu 3 5 1* = s*x4*
mu 3 4 2* = -t*x5*
mu 4 5 2* = -t*x3*
mu 3 5 2* = t*x4*
mu 3 4 3* = -u*x5*
mu 4 5 3* = -u*x3*
mu 3 5 3* = u*x4*
delta 1* = s*x4*^x3*^x5*
delta 2* = x4*^x1*^x5* + t*x4*^x3*^x5*
delta 3* = x4*^x2*^x5* + u*x4*^x3*^x5*
delta 1 = x2^x4*^x5*
delta 2 = x3^x4*^x5*
delta 3 = s*x1^x4*^x5* + t*x2^x4*^x5* + u*x3^x4*^x5*
delta 4 = x2^x5*^x1* + x3^x5*^x2* + s*x1^x5*^x3* + t*x2^x5*^x3* + u*x3^x5*^x3*
delta 5 = x2^x1*^x4* + x3^x2*^x4* + s*x1^x3*^x4* + t*x2^x3*^x4* + u*x3^x3*^x4*
end

case 5-e1
dim 5
note excluded from the printed tables: the derived algebra has dimension 4 and the center is zero
alg 2 3 4 = x1
alg 3 4 5 = x2
alg 2 4 5 = x3
alg 2 3 5 = x4
end

case 5-e2
dim 5
table psi16
note the source basis ([x2,x3,x4]=x1, [x1,x3,x4]=x2, [x1,x2,x4]=x3, [x1,x2,x3]=x4) admits no diagonal involutive derivation; the table's basis (the 4-dim e1 pattern plus a central x5) is used
alg 2 3 4 = -x2
alg 1 3 4 = x1
alg 1 2 3 = x3
alg 1 2 4 = -x4
mu 2 3 4 = -x2
mu 1 3 4 = x1
mu 1 2 3 = x3
mu 1 2 4 = -x4
mu 2 3 2* = x4*
mu 3 4 2* = x2*
mu 2 4 2* = -x3*
mu 1 3 1* = -x4*
mu 3 4 1* = -x1*
mu 1 4 1* = x3*
mu 1 2 3* = -x3*
mu 1 3 3* = x2*
mu 2 3 3* = -x1*
mu 1 2 4* = x4*
mu 1 4 4* = -x2*
mu 2 4 4* = x1*
delta 1* = x1*^x4*^x3*
delta 2* = x2*^x3*^x4*
delta 3* = x1*^x3*^x2*
delta 4* = x1*^x2*^x4*
delta 1 = x1^x3*^x4* + x2*^x3*^x3 + x4*^x2*^x4
delta 2 = x3^x3*^x1* + x4*^x3*^x2 + x4^x1*^x4*
delta 3 = x1*^x2*^x3 + x2*^x4*^x2 + x4*^x1*^x1
delta 4 = x1*^x4^x2* + x1^x1*^x3* + x2^x3*^x2*
end
)";

// --- expression tokenizer / evaluator --------------------------------------

struct Tok {
  enum Kind { Num, Par, Bas, Op } kind;
  Rat num;
  char par = 0;   // a b s t u
  int bidx = 0;   // 1-based
  bool star = false;
  char op = 0;
};

std::vector<Tok> lex_expr(const std::string& s) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      Tok t{Tok::Num, parse_rat(s.substr(i, j - i))};
      out.push_back(std::move(t));
      i = j;
    } else if (c == 'x' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
      size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      Tok t{Tok::Bas};
      t.bidx = std::stoi(s.substr(i + 1, j - i - 1));
      if (j < s.size() && s[j] == '*') {
        t.star = true;
        ++j;
      }
      out.push_back(std::move(t));
      i = j;
    } else if (c == 'a' || c == 'b' || c == 's' || c == 't' || c == 'u') {
      Tok t{Tok::Par};
      t.par = c;
      out.push_back(std::move(t));
      ++i;
    } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '(' || c == ')' || c == '^') {
      Tok t{Tok::Op};
      t.op = c;
      out.push_back(std::move(t));
      ++i;
    } else {
      throw ParseError(0, std::string("bad character '") + c + "' in fixture expression: " + s);
    }
  }
  return out;
}

class ExprEval {
 public:
  ExprEval(const std::string& s, const Params& params) : toks_(lex_expr(s)), p_(params) {}

  bool at_end() const { return pos_ == toks_.size(); }
  bool peek_op(char c) const { return pos_ < toks_.size() && toks_[pos_].kind == Tok::Op && toks_[pos_].op == c; }

  void expect_op(char c) {
    if (!peek_op(c)) throw ParseError(0, std::string("expected '") + c + "' in fixture expression");
    ++pos_;
  }
  bool peek_basis() const { return pos_ < toks_.size() && toks_[pos_].kind == Tok::Bas; }

  // Leading sign of a term; returns +-1.
  int sign() {
    int s = 1;
    while (peek_op('+') || peek_op('-')) {
      if (toks_[pos_].op == '-') s = -s;
      ++pos_;
    }
    return s;
  }

  Rat coefficient() {
    if (peek_basis()) return Rat(1);
    Rat c = product();
    if (peek_op('*')) ++pos_;  // the '*' between coefficient and basis vector
    return c;
  }

  Tok basis() {
    if (!peek_basis()) throw ParseError(0, "expected a basis symbol in fixture expression");
    return toks_[pos_++];
  }

  bool literal_zero() const {
    return toks_.size() == 1 && toks_[0].kind == Tok::Num && toks_[0].num == 0;
  }

 private:
  Rat atom() {
    if (pos_ == toks_.size()) throw ParseError(0, "truncated fixture expression");
    const Tok& t = toks_[pos_];
    if (t.kind == Tok::Num) {
      ++pos_;
      return t.num;
    }
    if (t.kind == Tok::Par) {
      ++pos_;
      return p_.get(std::string(1, t.par));
    }
    if (t.kind == Tok::Op && t.op == '-') {
      ++pos_;
      return -atom();
    }
    if (t.kind == Tok::Op && t.op == '(') {
      ++pos_;
      Rat v = sum();
      if (!peek_op(')')) throw ParseError(0, "missing ')' in fixture expression");
      ++pos_;
      return v;
    }
    throw ParseError(0, "bad coefficient in fixture expression");
  }

  Rat product() {
    Rat v = atom();
    while (pos_ < toks_.size() && toks_[pos_].kind == Tok::Op && (toks_[pos_].op == '*' || toks_[pos_].op == '/')) {
      // A '*' directly before a basis symbol terminates the coefficient.
      if (toks_[pos_].op == '*' && pos_ + 1 < toks_.size() && toks_[pos_ + 1].kind == Tok::Bas) break;
      char op = toks_[pos_++].op;
      Rat rhs = atom();
      if (op == '*')
        v *= rhs;
      else
        v /= rhs;
    }
    return v;
  }

  Rat sum() {
    Rat v = product();
    while (peek_op('+') || peek_op('-')) {
      char op = toks_[pos_++].op;
      Rat rhs = product();
      v += op == '+' ? rhs : -rhs;
    }
    return v;
  }

  std::vector<Tok> toks_;
  Params p_;
  size_t pos_ = 0;
};

// Linear combination over the 2n semidirect basis (stars offset by n).
Vec eval_combo(const std::string& expr, int n, const Params& params) {
  ExprEval ev(expr, params);
  Vec v = zero_vec(2 * n);
  if (ev.literal_zero()) return v;
  while (!ev.at_end()) {
    int sg = ev.sign();
    Rat c = ev.coefficient();
    Tok b = ev.basis();
    if (b.bidx < 1 || b.bidx > n) throw ParseError(0, "fixture basis index out of range: " + expr);
    v[static_cast<size_t>((b.star ? n : 0) + b.bidx - 1)] += sg * c;
  }
  return v;
}

struct WedgeTerm {
  Rat coeff;
  std::array<int, 3> idx;  // 0-based over 2n
  bool ill_formed = false;  // repeated factor
};

std::vector<WedgeTerm> eval_wedge(const std::string& expr, int n, const Params& params) {
  ExprEval ev(expr, params);
  std::vector<WedgeTerm> terms;
  if (ev.literal_zero()) return terms;
  while (!ev.at_end()) {
    int sg = ev.sign();
    Rat c = ev.coefficient();
    WedgeTerm w;
    w.coeff = sg * c;
    for (int f = 0; f < 3; ++f) {
      if (f > 0) ev.expect_op('^');
      Tok b = ev.basis();
      if (b.bidx < 1 || b.bidx > n) throw ParseError(0, "fixture basis index out of range: " + expr);
      w.idx[static_cast<size_t>(f)] = (b.star ? n : 0) + b.bidx - 1;
    }
    w.ill_formed = w.idx[0] == w.idx[1] || w.idx[1] == w.idx[2] || w.idx[0] == w.idx[2];
    terms.push_back(std::move(w));
  }
  return terms;
}

// --- fixture parsing --------------------------------------------------------

struct KeyTok {
  int idx;    // 1-based
  bool star;
};

struct CaseData {
  CatalogEntry entry;
  std::vector<std::tuple<int, int, int, std::string>> alg;  // 1-based i<j<k
  std::vector<std::pair<std::array<KeyTok, 3>, std::string>> mu;
  std::vector<std::pair<KeyTok, std::string>> delta;
};

KeyTok parse_key_tok(const std::string& tok) {
  KeyTok k{0, false};
  std::string digits = tok;
  if (!digits.empty() && digits.back() == '*') {
    k.star = true;
    digits.pop_back();
  }
  k.idx = std::stoi(digits);
  return k;
}

struct Fixtures {
  std::map<std::string, CaseData> cases;
  std::vector<std::string> order;
};

Fixtures parse_fixtures() {
  Fixtures fx;
  std::istringstream in(kFixtures);
  std::string line;
  CaseData cur;
  bool open = false;
  auto flush = [&] {
    fx.order.push_back(cur.entry.case_id);
    fx.cases.emplace(cur.entry.case_id, std::move(cur));
    cur = CaseData{};
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "case") {
      open = true;
      ls >> cur.entry.case_id;
    } else if (head == "dim") {
      ls >> cur.entry.dim;
    } else if (head == "table") {
      ls >> cur.entry.table;
    } else if (head == "require") {
      std::string p;
      ls >> p;
      cur.entry.required_nonzero.push_back(p);
    } else if (head == "witness") {
      cur.entry.has_witness_override = true;
      std::string s;
      while (ls >> s) cur.entry.witness_signs.push_back(s == "-" ? -1 : 1);
    } else if (head == "note") {
      std::string rest;
      std::getline(ls, rest);
      cur.entry.notes.push_back(rest.substr(rest.find_first_not_of(' ')));
    } else if (head == "alg" || head == "mu") {
      std::string t1, t2, t3, eq, rest;
      ls >> t1 >> t2 >> t3 >> eq;
      std::getline(ls, rest);
      if (head == "alg")
        cur.alg.emplace_back(std::stoi(t1), std::stoi(t2), std::stoi(t3), rest);
      else
        cur.mu.push_back({{parse_key_tok(t1), parse_key_tok(t2), parse_key_tok(t3)}, rest});
    } else if (head == "delta") {
      std::string t1, eq, rest;
      ls >> t1 >> eq;
      std::getline(ls, rest);
      cur.delta.push_back({parse_key_tok(t1), rest});
    } else if (head == "end") {
      if (open) flush();
      open = false;
    }
  }
  return fx;
}

const Fixtures& fixtures() {
  static const Fixtures fx = parse_fixtures();
  return fx;
}

const CaseData& case_data(const std::string& case_id) {
  auto it = fixtures().cases.find(case_id);
  if (it == fixtures().cases.end()) throw LookupError("unknown catalog case '" + case_id + "'");
  return it->second;
}

// 0-based semidirect index of a fixture key token.
int key_index(const KeyTok& k, int n) { return (k.star ? n : 0) + k.idx - 1; }

// Sorts a triple ascending, returning the permutation sign (0 on repeats).
int sort3_key(std::array<int, 3>& t) {
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < 2; ++i)
      if (t[static_cast<size_t>(i)] > t[static_cast<size_t>(i + 1)]) {
        std::swap(t[static_cast<size_t>(i)], t[static_cast<size_t>(i + 1)]);
        sign = -sign;
      }
  if (t[0] == t[1] || t[1] == t[2]) return 0;
  return sign;
}

std::string triple_name(const std::array<int, 3>& key, const std::vector<std::string>& labels) {
  return "(" + labels[static_cast<size_t>(key[0])] + "," + labels[static_cast<size_t>(key[1])] + "," +
         labels[static_cast<size_t>(key[2])] + ")";
}

std::string classify(const Rat& computed, const Rat& printed) {
  if (computed != 0 && printed == -computed) return "sign";
  return "structural";
}

}  // namespace

const std::vector<std::string>& catalog_cases() { return fixtures().order; }

const CatalogEntry& catalog_entry(const std::string& case_id) { return case_data(case_id).entry; }

bool has_printed_table(const std::string& case_id) { return !case_data(case_id).entry.table.empty(); }

Algebra catalog_algebra(const std::string& case_id, const Params& params) {
  const CaseData& cd = case_data(case_id);
  for (const std::string& p : cd.entry.required_nonzero)
    if (params.get(p) == 0)
      throw ParamError("case " + case_id + " requires " + (p == "a" ? "alpha" : p == "b" ? "beta" : p) + " != 0");
  int n = cd.entry.dim;
  Algebra alg(case_id, n);
  for (const auto& [i, j, k, expr] : cd.alg) {
    Vec full = eval_combo(expr, n, params);
    Vec v(full.begin(), full.begin() + n);
    alg.set_bracket(i - 1, j - 1, k - 1, std::move(v));
  }
  return alg;
}

PipelineResult reproduce_case(const std::string& case_id, const Params& params) {
  const CaseData& cd = case_data(case_id);
  PipelineResult res;
  res.alg = catalog_algebra(case_id, params);
  if (cd.entry.has_witness_override) {
    res.D = Mat::diagonal(cd.entry.witness_signs);
    if (!verify_involutive(res.alg, res.D).pass)
      throw DomainError("case " + case_id + ": pinned witness is not an involutive derivation");
    res.has_witness = true;
  } else {
    std::vector<Mat> ws = search_involutive_diagonal(res.alg);
    if (!ws.empty()) {
      res.D = ws.front();
      res.has_witness = true;
    }
  }
  res.B = semidirect(res.alg);
  if (res.has_witness) {
    res.r = r_from_D(res.alg, res.D);
    res.delta = coproduct_from_r(res.B, res.r);
  }
  return res;
}

DiscrepancyLedger compare_with_paper(const std::string& case_id, const Params& params) {
  const CaseData& cd = case_data(case_id);
  DiscrepancyLedger ledger;
  if (cd.entry.table.empty()) return ledger;
  PipelineResult pr = reproduce_case(case_id, params);
  int n = cd.entry.dim;
  const std::vector<std::string>& labels = pr.B.basis;

  // Printed semidirect table, duplicates summed and flagged.
  std::map<std::array<int, 3>, Vec> printed;
  std::map<std::array<int, 3>, int> count;
  for (const auto& [key_toks, expr] : cd.mu) {
    std::array<int, 3> key{key_index(key_toks[0], n), key_index(key_toks[1], n), key_index(key_toks[2], n)};
    int sg = sort3_key(key);
    Vec v = eval_combo(expr, n, params);
    if (sg < 0) v = -v;
    auto [it, fresh] = printed.emplace(key, zero_vec(2 * n));
    it->second = it->second + v;
    ++count[key];
    (void)fresh;
  }
  for (const auto& [key, c] : count)
    if (c > 1)
      ledger.push_back({case_id, "mu", "mu" + triple_name(key, labels),
                        format_combo(pr.B.bracket_basis(key[0], key[1], key[2]), labels),
                        "listed " + std::to_string(c) + " times (summed for comparison)", "typo"});

  std::map<std::array<int, 3>, Vec> computed(pr.B.c.begin(), pr.B.c.end());
  std::vector<std::array<int, 3>> keys;
  for (const auto& [k, v] : printed) keys.push_back(k);
  for (const auto& [k, v] : computed)
    if (!printed.count(k)) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  for (const auto& key : keys) {
    Vec cv = computed.count(key) ? computed.at(key) : zero_vec(2 * n);
    Vec pv = printed.count(key) ? printed.at(key) : zero_vec(2 * n);
    for (int d = 0; d < 2 * n; ++d) {
      const Rat& c = cv[static_cast<size_t>(d)];
      const Rat& p = pv[static_cast<size_t>(d)];
      if (c == p) continue;
      ledger.push_back({case_id, "mu", "mu" + triple_name(key, labels) + "[" + labels[static_cast<size_t>(d)] + "]",
                        to_string(c), to_string(p), classify(c, p)});
    }
  }

  // Printed coproduct table.
  if (pr.has_witness) {
    for (int d = 0; d < 2 * n; ++d) {
      Tensor computed_img = pr.delta.total(d);
      std::vector<const std::string*> exprs;
      for (const auto& [key, expr] : cd.delta)
        if (key_index(key, n) == d) exprs.push_back(&expr);
      std::string name = "Delta(" + labels[static_cast<size_t>(d)] + ")";
      if (exprs.size() > 1)
        ledger.push_back({case_id, "delta", name, wedge_normal_form(computed_img, labels),
                          "listed " + std::to_string(exprs.size()) + " times (summed for comparison)", "typo"});
      Tensor printed_img(3, 2 * n);
      bool ill = false;
      for (const std::string* expr : exprs) {
        for (const WedgeTerm& w : eval_wedge(*expr, n, params)) {
          if (w.ill_formed) {
            ill = true;
            ledger.push_back({case_id, "delta", name, wedge_normal_form(computed_img, labels),
                              "ill-formed term (repeated wedge factor) in \"" + *expr + "\"", "typo"});
            continue;
          }
          printed_img = tensor_add(
              printed_img, tensor_scale(w.coeff, wedge3(unit_vec(2 * n, w.idx[0]), unit_vec(2 * n, w.idx[1]),
                                                        unit_vec(2 * n, w.idx[2]))));
        }
      }
      if (ill) continue;  // the typo record carries the computed replacement
      for (int a = 0; a < 2 * n; ++a)
        for (int b = a + 1; b < 2 * n; ++b)
          for (int c = b + 1; c < 2 * n; ++c) {
            Rat cv = computed_img.at({a, b, c});
            Rat pv = printed_img.at({a, b, c});
            if (cv == pv) continue;
            ledger.push_back({case_id, "delta",
                              name + "[" + labels[static_cast<size_t>(a)] + "^" + labels[static_cast<size_t>(b)] +
                                  "^" + labels[static_cast<size_t>(c)] + "]",
                              to_string(cv), to_string(pv), classify(cv, pv)});
          }
    }
  }
  return ledger;
}

}  // namespace lie3
