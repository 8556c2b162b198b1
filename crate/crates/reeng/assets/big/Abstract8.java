public abstract class Abstract8 extends Abstract1 {
}
