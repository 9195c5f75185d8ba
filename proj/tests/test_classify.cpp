#include "doctest.h"

#include <cmath>
#include <set>

#include "hinglish/classify.hpp"
#include "hinglish/errors.hpp"
#include "support.hpp"

using namespace hinglish;

namespace {

FeatureMatrix count_matrix(const std::vector<std::string>& corpus) {
    Vocabulary v = fit_vocabulary(corpus, FeatureScheme::Count);
    return transform(corpus, v, FeatureScheme::Count);
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("make_split is deterministic and stratified") {
    std::vector<std::string> labels(10);
    for (size_t i = 0; i < 10; ++i) labels[i] = i < 5 ? "a" : "b";

    Split s1 = make_split(labels, 17, 0.2, true);
    Split s2 = make_split(labels, 17, 0.2, true);
    CHECK(s1.train == s2.train);
    CHECK(s1.test == s2.test);
    CHECK(s1.test.size() == 2);  // one per class

    size_t test_a = 0, test_b = 0;
    for (size_t i : s1.test) (labels[i] == "a" ? test_a : test_b)++;
    CHECK(test_a == 1);
    CHECK(test_b == 1);

    // disjoint and covering
    std::set<size_t> all(s1.train.begin(), s1.train.end());
    all.insert(s1.test.begin(), s1.test.end());
    CHECK(all.size() == 10);
}

TEST_CASE("split on a 9/1 imbalance keeps the minority within one item") {
    std::vector<std::string> labels(10, "big");
    labels[3] = "small";
    Split s = make_split(labels, 5, 0.5, true);
    size_t small_in_test = 0;
    for (size_t i : s.test) {
        if (labels[i] == "small") ++small_in_test;
    }
    CHECK(small_in_test <= 1);
}

TEST_CASE("split validation") {
    CHECK_THROWS_AS(make_split({}, 1, 0.2, true), ValidationError);
    CHECK_THROWS_AS(make_split({"a"}, 1, 1.5, true), ValidationError);
}

TEST_CASE("nb posterior on the two-doc toy matches hand computation") {
    // docs: "a a" -> pos, "b b" -> neg; vocab {a, b}; alpha = 1
    FeatureMatrix x = count_matrix({"a a", "b b"});
    NaiveBayes nb = NaiveBayes::train(x, {"pos", "neg"}, 1.0);

    // classes sorted: [neg, pos]; priors 1/2 each
    // p(a|pos) = (2+1)/(2+2) = 3/4, p(b|pos) = 1/4; mirrored for neg
    FeatureMatrix q = transform({"a"}, x.vocab, FeatureScheme::Count);
    auto rows = SparseRows::from(q);
    auto jll = nb.joint_log_likelihood(rows.rows[0]);
    REQUIRE(jll.size() == 2);
    double expect_neg = std::log(0.5) + std::log(1.0 / 4.0);
    double expect_pos = std::log(0.5) + std::log(3.0 / 4.0);
    CHECK(jll[0] == doctest::Approx(expect_neg).epsilon(1e-9));
    CHECK(jll[1] == doctest::Approx(expect_pos).epsilon(1e-9));
    CHECK(nb.predict(q) == std::vector<std::string>{"pos"});
}

TEST_CASE("nb on identical docs across classes predicts the majority prior") {
    FeatureMatrix x = count_matrix({"w w", "w w", "w w"});
    NaiveBayes nb = NaiveBayes::train(x, {"maj", "maj", "min"}, 1.0);
    FeatureMatrix q = transform({"w"}, x.vocab, FeatureScheme::Count);
    CHECK(nb.predict(q) == std::vector<std::string>{"maj"});
}

TEST_CASE("nb with huge alpha falls back to the prior argmax") {
    // likelihoods flatten to uniform, so the unequal prior decides
    FeatureMatrix x = count_matrix({"a a a a", "b", "b"});
    NaiveBayes nb = NaiveBayes::train(x, {"pos", "neg", "neg"}, 1e9);
    FeatureMatrix q = transform({"a a a a"}, x.vocab, FeatureScheme::Count);
    CHECK(nb.predict(q) == std::vector<std::string>{"neg"});
}

TEST_CASE("nb argmax invariant under prior scaling") {
    // scaling every class's doc count by the same factor preserves argmax
    FeatureMatrix x1 = count_matrix({"a b", "a a", "b b", "b a"});
    NaiveBayes nb1 = NaiveBayes::train(x1, {"p", "p", "n", "n"});
    FeatureMatrix x2 = count_matrix({"a b", "a a", "a b", "a a", "b b", "b a", "b b", "b a"});
    NaiveBayes nb2 = NaiveBayes::train(x2, {"p", "p", "p", "p", "n", "n", "n", "n"});
    FeatureMatrix q = transform({"a", "b", "a b b"}, x1.vocab, FeatureScheme::Count);
    CHECK(nb1.predict(q) == nb2.predict(q));
}

TEST_CASE("nb rejects single-class training sets") {
    FeatureMatrix x = count_matrix({"a", "b"});
    CHECK_THROWS_AS(NaiveBayes::train(x, {"same", "same"}), ValidationError);
    CHECK_THROWS_AS(LogisticRegression::train(x, {"same", "same"}), ValidationError);
}

TEST_CASE("logreg separates a separable toy corpus perfectly") {
    std::vector<std::string> corpus;
    std::vector<std::string> labels;
    for (int i = 0; i < 10; ++i) {
        corpus.push_back("alpha beta");
        labels.push_back("p");
        corpus.push_back("gamma delta");
        labels.push_back("n");
    }
    FeatureMatrix x = count_matrix(corpus);
    LogRegOptions opts;
    opts.epochs = 200;
    opts.lr = 0.5;
    opts.l2 = 0.0;
    LogisticRegression lr = LogisticRegression::train(x, labels, opts);
    EvalReport rep = evaluate(lr, x, labels);
    CHECK(rep.macro.f1 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("zero-epoch logreg predicts the class-prior argmax") {
    FeatureMatrix x = count_matrix({"a", "b", "c", "d", "e"});
    LogRegOptions opts;
    opts.epochs = 0;
    LogisticRegression lr = LogisticRegression::train(x, {"p", "p", "p", "n", "n"}, opts);
    FeatureMatrix q = transform({"a", "d"}, x.vocab, FeatureScheme::Count);
    CHECK(lr.predict(q) == std::vector<std::string>{"p", "p"});

    // balanced priors: tie resolves to the lowest class index
    LogisticRegression tie = LogisticRegression::train(
        count_matrix({"a", "b", "c", "d"}), {"p", "p", "n", "n"}, opts);
    FeatureMatrix q2 = transform({"a"}, x.vocab, FeatureScheme::Count);
    CHECK(tie.predict(q2) == std::vector<std::string>{"n"});  // "n" < "p"
}

TEST_CASE("logreg loss is non-increasing at the fixture learning rate") {
    FeatureMatrix x = count_matrix({"a a", "a b", "b b", "b a", "a", "b"});
    LogRegOptions opts;
    opts.epochs = 120;
    opts.lr = 0.2;
    opts.l2 = 1e-4;
    LogisticRegression lr = LogisticRegression::train(x, {"p", "p", "n", "n", "p", "n"}, opts);
    const auto& losses = lr.losses();
    REQUIRE(losses.size() == 121);
    for (size_t i = 1; i < losses.size(); ++i) {
        CHECK(losses[i] <= losses[i - 1] + 1e-12);
    }
}

TEST_CASE("analytic gradient matches central finite differences") {
    // 3 docs x 5 features, fixed values
    FeatureMatrix m;
    m.rows = 3;
    m.vocab.terms = {"f0", "f1", "f2", "f3", "f4"};
    for (size_t i = 0; i < 5; ++i) m.vocab.index[m.vocab.terms[i]] = i;
    m.values = {{0, 0, 1.5}, {0, 2, -0.5}, {0, 4, 2.0}, {1, 1, 1.0},
                {1, 3, 0.25}, {2, 0, -1.0}, {2, 2, 0.75}, {2, 4, 0.5}};
    SparseRows rows = SparseRows::from(m);
    std::vector<double> y01 = {1.0, 0.0, 1.0};
    std::vector<double> w = {0.3, -0.2, 0.05, 0.4, -0.15};
    double b = 0.1;
    double l2 = 0.01;

    std::vector<double> grad;
    double grad_b = 0.0;
    binary_logreg_gradient(rows, y01, w, b, l2, &grad, &grad_b);

    const double h = 1e-6;
    for (size_t i = 0; i < w.size(); ++i) {
        std::vector<double> wp = w, wm = w;
        wp[i] += h;
        wm[i] -= h;
        double fd = (binary_logreg_loss(rows, y01, wp, b, l2) -
                     binary_logreg_loss(rows, y01, wm, b, l2)) /
                    (2 * h);
        CHECK(std::abs(grad[i] - fd) / std::max(1e-12, std::abs(fd)) < 1e-5);
    }
    double fd_b = (binary_logreg_loss(rows, y01, w, b + h, l2) -
                   binary_logreg_loss(rows, y01, w, b - h, l2)) /
                  (2 * h);
    CHECK(std::abs(grad_b - fd_b) / std::max(1e-12, std::abs(fd_b)) < 1e-5);
}

TEST_CASE("perfect predictions give all-ones metrics and a diagonal confusion") {
    EvalReport rep = evaluate({"a", "b", "c", "a"}, {"a", "b", "c", "a"});
    CHECK(rep.macro.f1 == 1.0);
    CHECK(rep.weighted.precision == 1.0);
    for (size_t i = 0; i < rep.labels.size(); ++i) {
        for (size_t j = 0; j < rep.labels.size(); ++j) {
            if (i != j) CHECK(rep.confusion[i][j] == 0);
        }
        CHECK(rep.per_class[i].f1 == 1.0);
    }
}

TEST_CASE("all-one-class predictor on a balanced binary set: macro F1 = 1/3") {
    std::vector<std::string> y_true = {"a", "a", "b", "b"};
    std::vector<std::string> y_pred = {"a", "a", "a", "a"};
    EvalReport rep = evaluate(y_true, y_pred);
    // class a: P=1/2, R=1, F1=2/3; class b: 0
    CHECK(rep.macro.f1 == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(rep.per_class[0].f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(rep.per_class[1].f1 == 0.0);
}

TEST_CASE("confusion row sums equal class supports; metrics recompute exactly") {
    std::vector<std::string> y_true = {"a", "a", "a", "b", "b", "c", "c", "c", "c"};
    std::vector<std::string> y_pred = {"a", "b", "a", "b", "c", "c", "c", "a", "c"};
    EvalReport rep = evaluate(y_true, y_pred);

    for (size_t i = 0; i < rep.labels.size(); ++i) {
        size_t row_sum = 0;
        for (size_t j = 0; j < rep.labels.size(); ++j) row_sum += rep.confusion[i][j];
        CHECK(row_sum == rep.per_class[i].support);
    }

    // recompute from the emitted matrix
    for (size_t i = 0; i < rep.labels.size(); ++i) {
        size_t tp = rep.confusion[i][i];
        size_t col = 0, row = 0;
        for (size_t j = 0; j < rep.labels.size(); ++j) {
            col += rep.confusion[j][i];
            row += rep.confusion[i][j];
        }
        double p = col ? double(tp) / col : 0.0;
        double r = row ? double(tp) / row : 0.0;
        double f1 = (p + r) > 0 ? 2 * p * r / (p + r) : 0.0;
        CHECK(rep.per_class[i].precision == doctest::Approx(p).epsilon(1e-15));
        CHECK(rep.per_class[i].recall == doctest::Approx(r).epsilon(1e-15));
        CHECK(rep.per_class[i].f1 == doctest::Approx(f1).epsilon(1e-15));
    }

    // normalized rows sum to 1 for supported classes
    for (size_t i = 0; i < rep.labels.size(); ++i) {
        double s = 0;
        for (double v : rep.confusion_normalized[i]) s += v;
        CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("labels unseen in training are scored as never predicted") {
    EvalReport rep = evaluate({"a", "zed"}, {"a", "a"});
    REQUIRE(rep.labels.size() == 2);
    CHECK(rep.labels[1] == "zed");
    CHECK(rep.per_class[1].recall == 0.0);
    CHECK(rep.per_class[1].support == 1);
}

TEST_CASE("report json has the documented shape") {
    EvalReport rep = evaluate({"a", "b"}, {"a", "b"});
    auto j = rep.to_json();
    CHECK(j.contains("per_class"));
    CHECK(j.contains("macro"));
    CHECK(j.contains("weighted"));
    CHECK(j.contains("confusion"));
    CHECK(j["per_class"]["a"].contains("p"));
    CHECK(j["per_class"]["a"].contains("support"));
    CHECK(j["macro"].contains("f1"));

    std::string table = rep.to_table();
    CHECK(table.find("precision") != std::string::npos);
    CHECK(table.find("macro") != std::string::npos);
}

}  // TEST_SUITE
