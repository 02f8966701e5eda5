import pytest

from infrastructure.enums import FaultKindEnum, FragmentKindEnum
from services.pairing import fragment_name, plan_pairs
from services.testkit import corpus_from_spec, inject_fault, oracle_pairs, random_spec
from services.validation import validate_corpus


def plan(spec):
    corpus, markups = corpus_from_spec(spec)
    report = validate_corpus(corpus, markups)
    return report, plan_pairs(corpus, markups, report)


def pair_names(plans):
    return {
        (fragment_name(pair.og), fragment_name(pair.re))
        for item in plans
        for pair in item.pairs
    }


@pytest.mark.parametrize("seed", range(500))
def test_pairing_agrees_with_brute_force(seed):
    spec = random_spec(
        seed, redactions=True, messy=bool(seed % 2), dotted=seed % 3 == 0
    )
    expected = oracle_pairs(spec)

    report, plans = plan(spec)

    assert pair_names(plans) == expected.pairs
    assert report.excluded_conversations == expected.excluded
    long_pairs = sum(len(item.pairs_of(FragmentKindEnum.LONG)) for item in plans)
    short_pairs = sum(len(item.pairs_of(FragmentKindEnum.SHORT)) for item in plans)
    assert long_pairs == expected.stats.long_pairs
    assert short_pairs == expected.stats.short_pairs


def test_single_value_pair():
    spec = random_spec(seed=3, counts=[(1, 0, 0)])

    _, plans = plan(spec)

    (item,) = plans
    (pair,) = item.pairs
    og, re = spec.conversations
    assert fragment_name(pair.og).startswith(og.id)
    assert fragment_name(pair.re).startswith(re.id)
    assert pair.og.canonical_value == pair.re.canonical_value


def test_duplicate_value_is_not_paired():
    spec = random_spec(seed=3, counts=[(1, 0, 0)])
    faulty = inject_fault(spec, FaultKindEnum.DUPLICATE_MARKUP_VALUE)

    _, plans = plan(faulty)

    (item,) = plans
    assert item.pairs == ()
    assert oracle_pairs(faulty).pairs == frozenset()


CONVERSATION_FAULTS = [
    FaultKindEnum.MISSING_MARKUP,
    FaultKindEnum.MISSING_AUDIO,
    FaultKindEnum.BAD_CONVERSATION_ID,
    FaultKindEnum.BAD_OG_RE_CODE,
    FaultKindEnum.BAD_TRANSLATION,
    FaultKindEnum.BAD_TIER,
]


@pytest.mark.parametrize("kind", CONVERSATION_FAULTS)
def test_conversation_fault_drops_pair(kind):
    spec = random_spec(seed=9, counts=[(2, 1, 1), (2, 1, 1)])
    first = spec.conversations[0].id
    faulty = inject_fault(spec, kind)

    _, plans = plan(faulty)

    expected = oracle_pairs(faulty)
    assert pair_names(plans) == expected.pairs
    assert all(not name.startswith(first) for name, _ in expected.pairs)
    assert len(plans) == 1
