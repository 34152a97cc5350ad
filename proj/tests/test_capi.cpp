// Exercises the shared library through its C header only.
#include "frobroot.h"

#include <gtest/gtest.h>

#include <string>

namespace {

std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  frob_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, RingIdealTau) {
  frob_ring* ring = nullptr;
  ASSERT_EQ(frob_ring_create(3, "x,y", "grevlex", &ring), FROB_OK);
  frob_ideal* m = nullptr;
  ASSERT_EQ(frob_ideal_parse(ring, "x, y", &m), FROB_OK);
  frob_ideal* m2 = nullptr;
  ASSERT_EQ(frob_ideal_parse(ring, "x^2, x*y, y^2", &m2), FROB_OK);

  frob_ideal* t = nullptr;
  int truncated = -1;
  ASSERT_EQ(frob_tau(m2, "1", 10, &t, &truncated), FROB_OK);
  EXPECT_EQ(truncated, 0);
  int equal = 0;
  ASSERT_EQ(frob_ideal_equal(t, m, &equal), FROB_OK);
  EXPECT_EQ(equal, 1);

  char* s = nullptr;
  ASSERT_EQ(frob_ideal_to_string(t, &s), FROB_OK);
  EXPECT_EQ(take(s), "(x, y)");

  char* json = nullptr;
  ASSERT_EQ(frob_tau_json(m, "2", 10, &json), FROB_OK);
  std::string j = take(json);
  EXPECT_NE(j.find("\"tau\":[\"x\",\"y\"]"), std::string::npos);

  frob_ideal* root = nullptr;
  ASSERT_EQ(frob_frobenius_root(m2, 1, &root), FROB_OK);
  ASSERT_EQ(frob_ideal_to_string(root, &s), FROB_OK);
  EXPECT_EQ(take(s), "(1)");
  frob_ideal* pw = nullptr;
  ASSERT_EQ(frob_frobenius_power(m, 1, &pw), FROB_OK);
  ASSERT_EQ(frob_ideal_to_string(pw, &s), FROB_OK);
  EXPECT_EQ(take(s), "(x^3, y^3)");

  for (auto* h : {m, m2, t, root, pw}) frob_ideal_free(h);
  frob_ring_free(ring);
}

TEST(CApi, ErrorsCarryCodesAndMessages) {
  frob_ring* ring = nullptr;
  EXPECT_EQ(frob_ring_create(4, "x", "grevlex", &ring), FROB_INVALID_ARGUMENT);
  EXPECT_EQ(ring, nullptr);
  EXPECT_STRNE(frob_last_error(), "");
  EXPECT_EQ(frob_ring_create(3, "x", "weird", &ring), FROB_INVALID_ARGUMENT);
  ASSERT_EQ(frob_ring_create(3, "x", nullptr, &ring), FROB_OK);
  EXPECT_STREQ(frob_last_error(), "");
  frob_ideal* bad = nullptr;
  EXPECT_EQ(frob_ideal_parse(ring, "x +", &bad), FROB_SYNTAX_ERROR);
  EXPECT_EQ(frob_ideal_parse(ring, "y", &bad), FROB_UNKNOWN_NAME);
  EXPECT_EQ(frob_ideal_parse(nullptr, "x", &bad), FROB_INVALID_ARGUMENT);
  frob_ideal* zero = nullptr;
  ASSERT_EQ(frob_ideal_parse(ring, "0", &zero), FROB_OK);
  frob_ideal* t = nullptr;
  EXPECT_EQ(frob_tau(zero, "1", 10, &t, nullptr), FROB_ZERO_IDEAL);
  EXPECT_STREQ(frob_status_name(FROB_ZERO_IDEAL), "ZeroIdeal");
  frob_ideal_free(zero);
  frob_ring_free(ring);
}

TEST(CApi, Session) {
  frob_session* s = nullptr;
  ASSERT_EQ(frob_session_parse("ring p=3 vars=x,y\nideal m = x, y\ntau m^2\n", &s), FROB_OK);
  char* out = nullptr;
  int code = -1;
  ASSERT_EQ(frob_session_run(s, FROB_FORMAT_TEXT, 10, &out, &code), FROB_OK);
  EXPECT_EQ(code, 0);
  EXPECT_EQ(take(out), "tau(m^2) = (x, y)\n");
  ASSERT_EQ(frob_session_run(s, FROB_FORMAT_JSON, 0, &out, &code), FROB_OK);
  EXPECT_EQ(code, 2);
  EXPECT_NE(take(out).find("\"truncated\": true"), std::string::npos);
  frob_session_free(s);

  frob_session* bad = nullptr;
  EXPECT_EQ(frob_session_parse("ideal a = x", &bad), FROB_SYNTAX_ERROR);
  EXPECT_NE(std::string(frob_last_error()).find("ring must be declared first"), std::string::npos);
  EXPECT_EQ(frob_session_parse("ring p=3 vars=x\nring p=3 vars=x", &bad), FROB_DUPLICATE_RING);
}
