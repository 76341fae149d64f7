import augms


def test_worked_example_ms():
    ix = augms.build(b"abracadabra")
    assert ix.n == 12
    assert ix.r == 8
    assert ix.encoding == "full"
    assert ix.ms(b"abra") == [(8, 4), (9, 3), (10, 2), (11, 1)]
    assert ix.ms(b"zzzz") == [(0, 0), (0, 0), (0, 0), (0, 0)]


def test_mems_and_stats():
    ix = augms.build(b"abracadabra")
    assert ix.mems(b"adra") == [(1, 6, 2), (3, 10, 2)]
    assert ix.mems(b"adra", min_len=3) == []
    st = ix.stats()
    assert set(st) == {"direct_extensions", "jumps", "lce_calls", "lce_skips"}
    assert st["jumps"] == st["lce_calls"] + st["lce_skips"]


def test_modes_agree_and_skips_fire():
    text = (b"CC" + b"AGATACATTA" + b"CGATAGGCCA" + b"GGATATACAA" + b"GGATCCAATA"
            + b"GGATTACATA" + b"CGATTACTTA" + b"CGATTAGCCA" + b"AGATTATCAT"
            + b"AGATTATCCA" + b"TATCGC" + b"CC")
    ix = augms.build(text)
    pattern = b"AGATG"
    aug = ix.ms(pattern, augmented=True)
    aug_stats = ix.stats()
    base = ix.ms(pattern, augmented=False)
    base_stats = ix.stats()
    assert aug == base
    assert aug_stats["lce_skips"] > 0
    assert base_stats["lce_skips"] == 0
    assert aug_stats["lce_calls"] < base_stats["lce_calls"]


def test_save_load_roundtrip(tmp_path):
    ix = augms.build(b"abracadabra", encoding="bv-byte", lce="lcp-rmq")
    path = tmp_path / "t.idx"
    ix.save(str(path))
    back = augms.load(str(path))
    assert back.encoding == "bv-byte"
    assert back.ms(b"abra") == ix.ms(b"abra")


def test_build_from_file(tmp_path):
    fa = tmp_path / "in.fa"
    fa.write_bytes(b">r1\nacgt\n>r2\nggcc\n")
    ix = augms.build_from_file(str(fa))
    # lowercase folds to uppercase, and records never join into one match
    assert ix.ms(b"ACGT")[0] == (1, 4)
    assert ix.ms(b"TGGC")[0][1] < 4
