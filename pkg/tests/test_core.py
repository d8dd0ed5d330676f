import pytest

from parsigame import (
    BadInput,
    BoundViolation,
    EmptyRep,
    NotParsimonious,
    Overflow,
    TooSmall,
    build_game,
    check_weight_identities,
    enumerate_p_games,
    parse_free_rep,
    parse_min_homog_rep,
    parse_representation,
    validate_free_type_rep,
)


def test_validate_accepts_known_reps():
    rep = validate_free_type_rep((3, 1, 2, 2))
    assert rep.n == 9
    assert rep.h == 5
    rep = validate_free_type_rep((2, 2))
    assert rep.n == 5
    assert rep.h == 3
    rep = validate_free_type_rep((3,))
    assert rep.n == 4
    assert rep.h == 2


@pytest.mark.parametrize(
    "counts, error",
    [
        ((), EmptyRep),
        ((1, 2), BoundViolation),
        ((2, 1), BoundViolation),
        ((3, 0, 2), BoundViolation),
        ((2,), TooSmall),
        ((1,), BoundViolation),
    ],
)
def test_validate_rejections(counts, error):
    with pytest.raises(error):
        validate_free_type_rep(counts)


def test_validate_requires_integers():
    with pytest.raises(BadInput):
        validate_free_type_rep((3.0, 1, 2, 2))


def test_build_nine_player_games(game3122, game3113):
    assert game3122.player_weights == (1, 1, 1, 3, 4, 4, 11, 11, 15)
    assert game3122.quota == 26
    assert game3122.total_weight == 51
    assert game3122.type_weights == (1, 3, 4, 11, 15)
    assert game3122.player_type == (1, 1, 1, 2, 3, 3, 4, 4, 5)

    assert game3113.player_weights == (1, 1, 1, 3, 4, 7, 7, 7, 18)
    assert game3113.quota == 25
    assert game3113.total_weight == 49


def test_build_smallest_game(game3):
    # h = 2: the top weight is x_1 - 1
    assert game3.player_weights == (1, 1, 1, 2)
    assert game3.quota == 3
    assert game3.total_weight == 5


def test_build_five_player_game(game22):
    assert game22.player_weights == (1, 1, 2, 2, 3)
    assert game22.quota == 5
    assert game22.total_weight == 9


def test_total_weight_is_odd_mirror_of_quota(game3122, game3113, game3, game22):
    for game in (game3122, game3113, game3, game22):
        assert game.total_weight == 2 * game.quota - 1


def test_type_weights_strictly_increasing():
    for n in range(4, 11):
        for rep in enumerate_p_games(n):
            tw = build_game(rep).type_weights
            assert all(a < b for a, b in zip(tw, tw[1:]))


def test_weight_identities_hold(game3122, game3113, game3, game22):
    for game in (game3122, game3113, game3, game22):
        assert check_weight_identities(game)
    # spot value: w_4 = x_1*w_1 + x_3*w_3 = 3 + 8
    assert game3122.weight_of_type(4) == 11


def test_weight_identities_all_enumerated():
    for n in range(4, 13):
        for rep in enumerate_p_games(n):
            assert check_weight_identities(build_game(rep))


def test_players_of_type(game3122):
    assert list(game3122.players_of_type(1)) == [1, 2, 3]
    assert list(game3122.players_of_type(2)) == [4]
    assert list(game3122.players_of_type(5)) == [9]


def test_parse_min_homog_rep_round_trip(game3122, game3):
    rebuilt = parse_min_homog_rep(26, (1, 1, 1, 3, 4, 4, 11, 11, 15))
    assert rebuilt == game3122
    assert rebuilt.free_rep.counts == (3, 1, 2, 2)
    assert parse_min_homog_rep(3, (1, 1, 1, 2)) == game3


def test_parse_min_homog_rep_round_trip_enumerated():
    for n in range(4, 11):
        for rep in enumerate_p_games(n):
            game = build_game(rep)
            assert parse_min_homog_rep(game.quota, game.player_weights).free_rep == rep


@pytest.mark.parametrize(
    "quota, weights",
    [
        (4, (1, 1, 1, 2)),      # quota does not match the rebuild
        (3, (1, 1, 1, 3)),      # weights are not generated by any count vector
        (5, (1, 1, 1, 1)),      # top weight repeated
    ],
)
def test_parse_min_homog_rep_rejects(quota, weights):
    with pytest.raises(NotParsimonious):
        parse_min_homog_rep(quota, weights)


@pytest.mark.parametrize(
    "quota, weights",
    [
        (3, (2, 1, 1, 1)),      # unsorted
        (3, (2, 2, 2, 3)),      # minimum weight not 1
        (3, ()),                # empty
    ],
)
def test_parse_min_homog_rep_bad_input(quota, weights):
    with pytest.raises(BadInput):
        parse_min_homog_rep(quota, weights)


def test_free_rep_text_round_trip():
    rep = parse_free_rep("3,1,2,2")
    assert rep.counts == (3, 1, 2, 2)
    assert str(rep) == "3,1,2,2"
    assert parse_free_rep(" 2, 2 ").counts == (2, 2)
    with pytest.raises(BadInput):
        parse_free_rep("3,x")
    with pytest.raises(BadInput):
        parse_free_rep("")


def test_representation_text_round_trip(game3122):
    assert parse_representation(game3122.representation) == game3122
    with pytest.raises(BadInput):
        parse_representation("26 1 1 1")


def test_overflow_is_detected():
    with pytest.raises(Overflow):
        build_game(validate_free_type_rep((10**5, 10**5, 10**5, 10**5, 10**5)))
