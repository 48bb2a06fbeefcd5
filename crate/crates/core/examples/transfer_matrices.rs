use strip_divisions::transfer::{
    bar_matrix, bar_polynomial, dominant_eigenvalue_at_one, h_power_closed_form, hex_matrix, hex_polynomial,
    matrix_power, verify_fib_power, verify_h_power_closed_form,
};

fn show(label: &str, m: &strip_divisions::transfer::TransferMatrix2) {
    let [[a, b], [c, d]] = &m.entries;
    println!("{label} = [[{a}, {b}], [{c}, {d}]]");
}

fn main() {
    show("H", &hex_matrix());
    show("Q", &bar_matrix());
    for e in 2..=4 {
        show(&format!("H^{e}"), &matrix_power(&hex_matrix(), e));
    }
    show("closed form n=4", &h_power_closed_form(4));

    println!("hex n=7: {}", hex_polynomial(7));
    println!("bar n=4: {}", bar_polynomial(4));

    let ok = (1..=40).all(|n| verify_h_power_closed_form(n) && verify_fib_power(n));
    println!("powers 1..=40 match closed forms: {ok}");

    println!("dominant eigenvalue at y=1: hex {:.12}, bar {:.12}",
        dominant_eigenvalue_at_one(&hex_matrix()),
        dominant_eigenvalue_at_one(&bar_matrix()));
}
