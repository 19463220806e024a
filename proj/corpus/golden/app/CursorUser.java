package app;

public class CursorUser {
    public int sum(String q) {
        try (Cursor c = new Cursor(q)) {
            int total = 0;
            while (c.next()) {
                total = total + c.value();
            }
            return total;
        }
    }

    public int pair(String q) {
        try (Cursor first = new Cursor(q); Cursor second = new Cursor("select 2")) {
            return first.value() + second.value();
        }
    }
}
