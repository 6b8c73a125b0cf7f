//! Replay a sequence of moves from a starting arrangement and dump each
//! board in the `i j mult` text format.
//!
//! cargo run --example board_replay -- 1 0,2 2,0 1,1

use pebbling::board::{initial_board, Board};

fn parse_cell(s: &str) -> (usize, usize) {
    let (i, j) = s.split_once(',').expect("cells are written i,j");
    (
        i.parse().expect("row index"),
        j.parse().expect("column index"),
    )
}

fn main() -> pebbling::Result<()> {
    let mut args = std::env::args().skip(1);
    let m: usize = args
        .next()
        .map_or(0, |s| s.parse().expect("m must be an integer"));
    let mut board = initial_board(m);
    println!("# start, m = {m}\n{}", board.to_text());

    for cell in args.map(|s| parse_cell(&s)) {
        board = board.apply_move(cell)?;
        println!(
            "# after ({}, {}): {} pebbles, clean = {}",
            cell.0,
            cell.1,
            board.pebbles(),
            board.is_clean()
        );
        print!("{}", board.to_text());
        println!("# legal next: {:?}", board.legal_moves());
    }

    // the text form round-trips
    assert_eq!(Board::from_text(&board.to_text())?, board);
    Ok(())
}
