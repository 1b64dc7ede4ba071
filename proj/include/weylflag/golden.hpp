#pragma once

namespace weylflag::golden {

// Frozen regression fixtures.  The tangent tables were produced by the
// Jacobian rank computation (the independent route) and pasted verbatim; the
// bad-pair line is the one exceptional pair of the n = 4 census.
extern const char* tangent_table_n2;
extern const char* tangent_table_n3;
extern const char* tangent_table_n4;
extern const char* bad_pair_n4_w1;
extern const char* bad_pair_n4_w2;

}  // namespace weylflag::golden
