#include <gtest/gtest.h>

#include "mock_http.hpp"
#include "ucds/redirect.hpp"
#include "ucds/url_pipeline.hpp"

namespace ucds {
namespace {

using testing::CountingResolver;
using testing::MockRedirectServer;
using namespace std::chrono_literals;

ShortenerPolicy TestPolicy() {
  ShortenerPolicy policy;
  policy.allowlist = {"short.test", "bit.ly", "youtu.be"};
  return policy;
}

TEST(ResolveShortener, NonShortenerIsUntouchedWithoutCalls) {
  CountingResolver resolver;
  const Resolution r = ResolveShortener("https://example.com/a", &resolver, TestPolicy());
  EXPECT_EQ(r.url, "https://example.com/a");
  EXPECT_FALSE(r.was_shortened);
  EXPECT_EQ(r.status, ResolutionStatus::kNotShortened);
  EXPECT_EQ(resolver.calls(), 0u);
}

TEST(ResolveShortener, FollowsChainToFirstNonShortener) {
  CountingResolver resolver;
  resolver.Set("https://short.test/a", {"https://short.test/b"});
  resolver.Set("https://short.test/b", {"https://long.test/page"});
  const Resolution r = ResolveShortener("https://short.test/a", &resolver, TestPolicy());
  EXPECT_EQ(r.url, "https://long.test/page");
  EXPECT_TRUE(r.was_shortened);
  EXPECT_EQ(r.status, ResolutionStatus::kResolved);
  EXPECT_EQ(resolver.calls(), 2u);
}

TEST(ResolveShortener, LoopDegradesToOriginal) {
  CountingResolver resolver;
  resolver.Set("https://short.test/a", {"https://short.test/b"});
  resolver.Set("https://short.test/b", {"https://short.test/a"});
  const Resolution r = ResolveShortener("https://short.test/a", &resolver, TestPolicy());
  EXPECT_EQ(r.status, ResolutionStatus::kRedirectLoop);
  EXPECT_TRUE(r.degraded());
  EXPECT_EQ(r.url, "https://short.test/a");

  UrlPipelineOptions options;
  options.shorteners = TestPolicy();
  auto shared = std::make_shared<CountingResolver>();
  shared->Set("https://short.test/a", {"https://short.test/b"});
  shared->Set("https://short.test/b", {"https://short.test/a"});
  const PipelineResult result = UrlPipeline(options, shared).Process({"https://short.test/a"});
  ASSERT_TRUE(result.urls[0].reduced);
  EXPECT_EQ(result.urls[0].reduced->domain, "short.test");
  EXPECT_EQ(result.diagnostics.redirect_loops, 1u);
}

TEST(ResolveShortener, DepthBound) {
  CountingResolver resolver;
  for (int i = 0; i < 5; ++i) {
    resolver.Set("https://short.test/" + std::to_string(i), {"https://short.test/" + std::to_string(i + 1)});
  }
  resolver.Set("https://short.test/5", {"https://long.test/end"});

  // Five hops from /1 reach the final page.
  Resolution r = ResolveShortener("https://short.test/1", &resolver, TestPolicy());
  EXPECT_EQ(r.status, ResolutionStatus::kResolved);
  EXPECT_EQ(r.url, "https://long.test/end");
  EXPECT_EQ(r.network_calls, 5u);

  // Six hops from /0 exceed the bound.
  r = ResolveShortener("https://short.test/0", &resolver, TestPolicy());
  EXPECT_EQ(r.status, ResolutionStatus::kDepthExceeded);
  EXPECT_EQ(r.url, "https://short.test/0");
  EXPECT_EQ(r.network_calls, 5u);
}

TEST(ResolveShortener, FailureDegrades) {
  CountingResolver resolver;
  resolver.Set("https://bit.ly/x", {std::nullopt, /*fail=*/true});
  const Resolution r = ResolveShortener("https://bit.ly/x", &resolver, TestPolicy());
  EXPECT_EQ(r.status, ResolutionStatus::kResolutionFailed);
  EXPECT_EQ(r.url, "https://bit.ly/x");
  EXPECT_TRUE(r.was_shortened);
}

TEST(ResolveShortener, OfflineMakesNoCalls) {
  CountingResolver resolver;
  resolver.Set("https://bit.ly/x", {"https://long.test/"});
  ShortenerPolicy policy = TestPolicy();
  policy.offline = true;
  const Resolution r = ResolveShortener("https://bit.ly/x", &resolver, policy);
  EXPECT_EQ(r.status, ResolutionStatus::kOffline);
  EXPECT_EQ(r.url, "https://bit.ly/x");
  EXPECT_EQ(resolver.calls(), 0u);
}

TEST(ResolveShortener, YoutubeShortLinksNeedNoNetwork) {
  CountingResolver resolver;
  ShortenerPolicy policy = TestPolicy();
  policy.offline = true;
  const Resolution r = ResolveShortener("https://youtu.be/dQw4w9WgXcQ", &resolver, policy);
  EXPECT_EQ(r.status, ResolutionStatus::kStaticAlias);
  EXPECT_TRUE(r.was_shortened);
  EXPECT_EQ(r.url, "https://youtube.com/");
  EXPECT_EQ(resolver.calls(), 0u);
}

TEST(UrlPipeline, PreservesOrderAndCountsDiagnostics) {
  UrlPipelineOptions options;
  options.shorteners = TestPolicy();
  options.max_in_flight = 4;
  auto resolver = std::make_shared<CountingResolver>();
  std::vector<std::string> urls;
  for (int i = 0; i < 40; ++i) {
    const std::string s = "https://short.test/" + std::to_string(i);
    resolver->Set(s, {"https://www.site" + std::to_string(i) + ".org/"});
    urls.push_back(s);
  }
  urls.push_back("https://192.168.1.1/");
  const PipelineResult result = UrlPipeline(options, resolver).Process(urls);
  ASSERT_EQ(result.urls.size(), 41u);
  for (int i = 0; i < 40; ++i) {
    ASSERT_TRUE(result.urls[i].reduced);
    EXPECT_EQ(result.urls[i].reduced->domain, "site" + std::to_string(i) + ".org");
  }
  EXPECT_FALSE(result.urls[40].reduced);
  EXPECT_EQ(result.diagnostics.unparseable, 1u);
  EXPECT_EQ(result.diagnostics.network_calls, 40u);
}

class HttpResolverTest : public ::testing::Test {
 protected:
  MockRedirectServer server;
  std::vector<std::string> hosts{"short.test", "bit.ly", "long.test"};
};

TEST_F(HttpResolverTest, ReadsLocationWithoutBody) {
  server.Add("short.test", "/a", {301, "https://long.test/page"});
  server.Add("short.test", "/rel", {302, "/a"});
  server.Add("long.test", "/page", {200, "", 0ms, 1 << 20});
  HttpRedirectResolver resolver(server.ResolverOptions(hosts, 2000ms));
  EXPECT_EQ(resolver.Resolve("http://short.test/a"), "https://long.test/page");
  EXPECT_EQ(resolver.Resolve("http://short.test/rel"), "http://short.test/a");
  EXPECT_EQ(resolver.Resolve("http://long.test/page"), std::nullopt);
  EXPECT_EQ(server.hits(), 3u);
}

TEST_F(HttpResolverTest, ChainOfFiveThroughRealSockets) {
  for (int i = 1; i <= 4; ++i) {
    server.Add("short.test", "/" + std::to_string(i), {301, "http://short.test/" + std::to_string(i + 1)});
  }
  server.Add("short.test", "/5", {308, "http://long.test/final"});
  auto resolver = std::make_shared<HttpRedirectResolver>(server.ResolverOptions(hosts, 2000ms));
  const Resolution r = ResolveShortener("http://short.test/1", resolver.get(), TestPolicy());
  EXPECT_EQ(r.status, ResolutionStatus::kResolved);
  EXPECT_EQ(r.url, "http://long.test/final");
  EXPECT_EQ(server.hits(), 5u);
}

TEST_F(HttpResolverTest, TimeoutAndRefusedConnectionsDegrade) {
  server.Add("short.test", "/slow", {301, "http://long.test/", 1500ms});
  auto options = server.ResolverOptions(hosts, 200ms);
  options.connect_overrides["bit.ly"] = "http://127.0.0.1:1";
  HttpRedirectResolver resolver(options);

  const auto start = std::chrono::steady_clock::now();
  Resolution r = ResolveShortener("http://short.test/slow", &resolver, TestPolicy());
  EXPECT_EQ(r.status, ResolutionStatus::kResolutionFailed);
  EXPECT_EQ(r.url, "http://short.test/slow");
  EXPECT_LT(std::chrono::steady_clock::now() - start, 1200ms);

  r = ResolveShortener("http://bit.ly/x", &resolver, TestPolicy());
  EXPECT_EQ(r.status, ResolutionStatus::kResolutionFailed);
}

}  // namespace
}  // namespace ucds
