package app;

public class StreamDemo {
    public void greet() {
        System.out.println(new StringBuilder().append("Hello").append(',').append(42));
        System.out.print("Output w/o an endl\n");
    }

    public void blank() {
        System.out.println();
    }

    public void report(int n, boolean ok) {
        System.err.println(new StringBuilder().append("n=").append(n).append(" ok=").append(ok? 1: 0));
    }
}
