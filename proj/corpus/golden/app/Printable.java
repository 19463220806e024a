package app;

public interface Printable {
    void print();

    default String label() {
        return "printable";
    }
}
