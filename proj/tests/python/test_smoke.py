import scholarmatch as sm


def test_normalize_variants():
    tokens = sm.normalize("Müller")
    assert tokens[0]["base"] == "muller"
    assert "mueller" in tokens[0]["variants"]


def test_parse_display_name():
    parses = sm.parse_display_name("M.C. Silva")
    assert any(p["initials"] == "mc" and p["surname"] == ["silva"] for p in parses)


def test_parse_handle_camel_case():
    parses = sm.parse_handle("MariaSilva")
    assert any(p["given"] == ["maria"] and p["surname"] == ["silva"] for p in parses)


def test_freq_bucket_boundaries():
    assert sm.freq_bucket(1, 4) == 3
    assert sm.freq_bucket(1, 30) == 2
    assert sm.freq_bucket(1, 31) == 1


def test_end_to_end_link_and_evaluate(tmp_path):
    out = str(tmp_path)
    n_gold = sm.synth_corpus(
        n_authors=200, n_accounts=100, fraction_linked=0.5,
        seed=11, noise=False, out_dir=out)
    assert n_gold == 50

    matches = sm.link(f"{out}/authors.jsonl", f"{out}/accounts.jsonl",
                      min_score=4, workers=2)
    assert matches
    assert all(m["total"] >= 4 for m in matches)
    assert all(sum(m["rule_scores"]) == m["total"] for m in matches)

    rows = sm.evaluate(f"{out}/authors.jsonl", f"{out}/accounts.jsonl",
                       f"{out}/gold.csv")
    assert [r["threshold"] for r in rows] == [6, 5, 4, 3, 2]
    at4 = rows[2]
    assert at4["precision"] == 1.0
    assert at4["recall"] == 1.0
