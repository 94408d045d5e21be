#include <posring/refute.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace posring;

namespace {
Certificate cert(const RefuteResult& r) {
    REQUIRE(std::holds_alternative<Certificate>(r));
    return std::get<Certificate>(r);
}
NotFound not_found(const RefuteResult& r) {
    REQUIRE(std::holds_alternative<NotFound>(r));
    return std::get<NotFound>(r);
}
}  // namespace

TEST_CASE("property name parsing") {
    CHECK(parse_property("ACCP") == Property::ACCP);
    CHECK(to_string(Property::HF) == "HF");
    CHECK_THROWS_AS(parse_property("accp"), invalid_input);
}

TEST_CASE("refuting ACCP on N0[2/3] yields a verified descending chain") {
    const Certificate& c = cert(refute_property(parse_model("N0[2/3]"), Side::Add, Property::ACCP));
    CHECK(c.kind == CertKind::AccpFailChain);
    CHECK(c.verified);
    CHECK(c.payload["elements"][0] == "2");
    CHECK(c.payload["elements"][1] == "4/3");

    // q > 1: the chain search reports no chain rather than fabricating one.
    not_found(refute_property(parse_model("N0[3/2]"), Side::Add, Property::ACCP));
    CHECK_THROWS_AS(refute_property(parse_model("N0[1/2]"), Side::Add, Property::ACCP),
                    unsupported);
}

TEST_CASE("refuting BF: unbounded length sets") {
    const Certificate& c = cert(refute_property(parse_model("N0[2/3]"), Side::Add, Property::BF));
    CHECK(c.kind == CertKind::NonBFFamily);
    CHECK(c.verified);
    CHECK(c.payload["element"] == "2");
    CHECK(c.payload["lengths"].size() >= 3);

    const Certificate& e = cert(refute_property(parse_model("E(unitfrac<=5)"), Side::Mul,
                                                Property::BF));
    CHECK(e.kind == CertKind::NonBFFamily);
    CHECK(e.payload["lengths"] == nlohmann::json::array({2, 3, 5}));
}

TEST_CASE("the bounded ACCP probe on E(M) never claims a failure") {
    const NotFound& nf =
        not_found(refute_property(parse_model("E(unitfrac<=5)"), Side::Mul, Property::ACCP));
    CHECK(nf.reason.find("no descending chain") != std::string::npos);
}

TEST_CASE("refuting FF: pairwise-distinct factorization families") {
    const Certificate& r = cert(refute_property(parse_model("ray(2)"), Side::Add, Property::FF));
    CHECK(r.kind == CertKind::NonFFFamily);
    CHECK(r.verified);
    CHECK(r.payload["factorizations"].size() == 5);

    const Certificate& f = cert(refute_property(
        parse_model("rank2family(cap=4, omega=(3/2,8/5))"), Side::Add, Property::FF));
    CHECK(f.kind == CertKind::NonFFFamily);
    CHECK(f.verified);
}

TEST_CASE("refuting HF and LF on N0[x], ray(2), and numerical monoids") {
    const Certificate& hf = cert(refute_property(parse_model("N0[x]"), Side::Mul, Property::HF));
    CHECK(hf.kind == CertKind::NotHF);
    CHECK(hf.payload["lengths"] == nlohmann::json::array({2, 3}));
    const Certificate& lf = cert(refute_property(parse_model("N0[x]"), Side::Mul, Property::LF));
    CHECK(lf.kind == CertKind::NotLF);
    CHECK(lf.payload["element"] == "x^4 + 2x^3 + 2x^2 + 7x + 6");

    const Certificate& ray_lf = cert(refute_property(parse_model("ray(2)"), Side::Mul,
                                                     Property::LF));
    CHECK(ray_lf.kind == CertKind::NotLF);
    CHECK(ray_lf.payload["side"] == "mul");

    SemiringModel n35 = parse_model("numerical(3,5)");
    CHECK(cert(refute_property(n35, Side::Mul, Property::LF)).payload["element"] == "96");
    CHECK(cert(refute_property(n35, Side::Add, Property::HF)).payload["element"] == "15");
    // <3,5> is additively length-factorial below the scan limit.
    not_found(refute_property(n35, Side::Add, Property::LF));
    CHECK(cert(refute_property(parse_model("numerical(3,5,7)"), Side::Add, Property::LF))
              .payload["element"] == "10");
}

TEST_CASE("properties that hold report NotFound instead of a certificate") {
    not_found(refute_property(parse_model("ray(2)"), Side::Add, Property::BF));
    not_found(refute_property(parse_model("numerical(3,5)"), Side::Add, Property::FF));
    not_found(refute_property(parse_model("rank2(pi; 2; (pi+2)/2)"), Side::Add, Property::HF));
}

TEST_CASE("the four-separation diagram verifies and serializes deterministically") {
    DiagramReport rep = verify_diagram();
    REQUIRE(rep.separations.size() == 4);
    CHECK(rep.all_verified());

    CHECK(rep.separations[0].witness_model == "N0[2/3]");
    CHECK(rep.separations[0].refuted_properties == std::vector<std::string>{"ACCP"});
    CHECK(rep.separations[0].evidence_mode == "closed-form");
    CHECK(rep.separations[1].witness_model == "E(unitfrac<=7)");
    CHECK(rep.separations[1].evidence_mode == "probe");
    CHECK(rep.separations[1].certificates[0].payload["lengths"] ==
          nlohmann::json::array({2, 3, 5, 7}));
    CHECK(rep.separations[2].witness_model == "ray(2)");
    CHECK(rep.separations[3].witness_model == "N0[x]");
    CHECK(rep.separations[3].refuted_properties == std::vector<std::string>{"HF", "LF"});
    REQUIRE(rep.separations[3].certificates.size() == 2);

    for (const auto& s : rep.separations)
        for (const auto& c : s.certificates) CHECK(c.verified);

    nlohmann::json a = rep.to_json(false);
    nlohmann::json b = verify_diagram().to_json(false);
    CHECK(a == b);
    CHECK_FALSE(a.contains("generatedAt"));
    CHECK(rep.to_json(true).contains("generatedAt"));
}
