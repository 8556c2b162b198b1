public abstract class Abstract24 extends State {
}
